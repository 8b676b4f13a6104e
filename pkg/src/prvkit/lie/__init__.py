# Root data, Weyl groups and characters
