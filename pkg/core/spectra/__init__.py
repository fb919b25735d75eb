from .number_theory import PRIMES, prime_factors, mobius, divisors, lcm
from .factored import FactoredValue, ONE, factorize, product
from .spectrum import OrderSpectrum, ExponentSpectrum, InconsistentSpectrumError, order_spectrum, \
    exponent_spectrum, order_from_exponent, group_exponent, same_order_type, spectrum_power_product, joint_exponent
from .revolved import RevolvedSpectrum, ValuationVector, revolved_at, revolved_spectrum, valuation_vector
