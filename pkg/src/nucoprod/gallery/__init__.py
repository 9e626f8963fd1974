"""Example families of coproducts on non-unital algebras."""
