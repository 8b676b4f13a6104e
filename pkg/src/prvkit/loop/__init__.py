# Truncated Laurent matrices and lattices for SL_m
