from .base_evaluator import BaseEvaluator
from .theorem_evaluator import TheoremEvaluator, TheoremReport
from .certificate_searcher import CertificateSearcher, SearchResult, STATUS_VERIFIED, STATUS_INFEASIBLE, \
    STATUS_VERIFICATION_FAILED, STATUS_SOLVABLE_TARGET
