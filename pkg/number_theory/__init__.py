# Continued fractions, approximants and exponential sums
