"""Reed-Muller-type evaluation codes and their generalized Hamming weights."""
