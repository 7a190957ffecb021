# Figure presets, CSV tables and SVG plots
