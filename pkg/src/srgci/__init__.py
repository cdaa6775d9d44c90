"""Stanley-Reisner ideals whose powers are linear with finite local cohomology."""
