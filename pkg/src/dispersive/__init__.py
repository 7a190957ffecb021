# Periodic dispersive solver package
