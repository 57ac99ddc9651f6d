from fractions import Fraction

from hypothesis import settings, strategies as st

from su2five.exactfield import FieldElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
field_elements = st.builds(FieldElement, small_fractions, small_fractions, small_fractions, small_fractions)
nonzero_field_elements = field_elements.filter(lambda x: not x.is_zero())
rational_turns = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 24))
