# Test package for qsr-lab
