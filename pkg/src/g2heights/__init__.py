"""p-adic sigma functions, Neron functions and heights for odd-degree
genus-2 hyperelliptic Jacobians, with a quadratic-Chabauty front end."""

__version__ = "0.1.0"
