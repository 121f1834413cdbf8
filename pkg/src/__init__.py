"""arqkit: combinatorics of Auslander-Reiten quivers."""
