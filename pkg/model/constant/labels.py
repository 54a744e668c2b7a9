WAVEGUIDE_A = 'a'
WAVEGUIDE_B = 'b'

TWO_LEVEL = 'two-level'
NABLA = 'nabla'
DELTA = 'delta'

MODEL_KINDS = (TWO_LEVEL, NABLA, DELTA)
