"""Text tables and JSON reports for the rho-tensor command line."""
