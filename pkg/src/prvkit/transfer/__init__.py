# Transfer of invariants between root data
