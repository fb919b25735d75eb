from .linear_system import SparseRationalMatrix, LinearSystem, build_system
from .screen import ScreenResult, least_squares_screen, DEFAULT_ITER_FACTOR, DEFAULT_NORMAL_TOL
from .exact_solver import SolutionSpace, Infeasibility, SolverSoundnessError, solve_exact
from .certificate import MultiplicityCertificate, CertificateError, CheckResult, VerificationReport, \
    published_certificate, to_certificate, verify_certificate, valuation_balance
from .corpus import CORPUS_SIDES, group_valuation, search_corpus
