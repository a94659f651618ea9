from hypothesis import strategies as st

from weakfubini.perm import Permutation


@st.composite
def permutations_of(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def preference_tuples(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.lists(st.integers(1, n), min_size=n, max_size=n)))
