'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Evaluator searching a multiplicity certificate for a target group: corpus assembly, least-squares
    screen, exact solve with increasing target multiplicity, conversion and brute-force verification.
'''
from typing import Dict, NamedTuple, Optional, Union

from loguru import logger

from core.data import Catalog, GroupDescriptor, merge_catalogs
from core.solver import Infeasibility, LinearSystem, MultiplicityCertificate, ScreenResult, VerificationReport, \
    build_system, group_valuation, least_squares_screen, search_corpus, solve_exact, to_certificate, \
    verify_certificate
from core.groups import DEFAULT_MAX_NORMAL_CLOSURES
from .base_evaluator import BaseEvaluator

STATUS_VERIFIED = 'verified'
STATUS_INFEASIBLE = 'infeasible'
STATUS_VERIFICATION_FAILED = 'verification_failed'
STATUS_SOLVABLE_TARGET = 'solvable_target'


def _screen_dict(screen: ScreenResult) -> Dict:
    return dict(
        residual=screen.residual,
        iterations=screen.iterations,
        normal_residual=screen.normal_residual,
        converged=screen.converged,
        upper_bound=screen.upper_bound,
    )


def _infeasibility_dict(system: LinearSystem, report: Infeasibility) -> Dict:
    witness = [
        dict(row=list(key), coefficient=str(y))
        for key, y in zip(system.matrix.row_index, report.witness) if y != 0
    ]
    return dict(row_key=list(report.row_key), rank=report.rank, value=str(report.value), witness=witness)


class SearchResult(NamedTuple):
    status: str
    target: GroupDescriptor
    target_multiplicity: int
    corpus_size: int
    screen: Optional[ScreenResult] = None
    certificate: Optional[MultiplicityCertificate] = None
    verification: Optional[VerificationReport] = None
    infeasibility: Optional[Dict] = None

    def to_dict(self) -> Dict:
        data = dict(
            status=self.status,
            target=dict(id=list(self.target.id), name=self.target.name),
            target_multiplicity=self.target_multiplicity,
            corpus_size=self.corpus_size,
        )
        if self.screen is not None:
            data['screen'] = _screen_dict(self.screen)
        if self.certificate is not None:
            verified = self.verification.passed if self.verification is not None else None
            joint = self.verification.joint_exponent if self.verification is not None else None
            data['certificate'] = self.certificate.to_dict(verified, joint)
        if self.verification is not None:
            data['checks'] = self.verification.to_list()
        if self.infeasibility is not None:
            data['infeasibility'] = self.infeasibility
        return data


class CertificateSearcher(BaseEvaluator):
    """
    Evaluator asking whether a target group's order type is reached by a rational combination of solvable
    catalog groups. The solvable published-side groups, plus every solvable entry of an optional extra corpus,
    form the columns. The exact solve is retried with target multiplicity ``t = 1, 2, ...`` until the particular
    solution is integral; past ``max_multiplicity`` the ``t = 1`` solution is scaled by its denominators instead.

    :Arguments:
        - cfg (Dict): Config dict.
        - catalog (Catalog): Main catalog.
        - extra (Catalog, optional): Extra corpus.

    :Interfaces: reset, eval, close, screen
    """

    config = dict(
        max_multiplicity=8,
        iter_factor=10,
        normal_tol=1e-10,
        screen_tol=1e-4,
        run_screen=True,
        exclude_direct_products=False,
        max_normal_closures=DEFAULT_MAX_NORMAL_CLOSURES,
    )

    def __init__(self, cfg: Dict, catalog: Catalog, extra: Optional[Catalog] = None) -> None:
        super().__init__(cfg, catalog)
        self._extra = extra
        self._merged = merge_catalogs(catalog, extra) if extra is not None else catalog

    def reset(self) -> None:
        pass

    def close(self) -> None:
        pass

    def _system(self, target: GroupDescriptor, target_multiplicity: int = 1):
        corpus = search_corpus(
            self._catalog,
            target.id,
            self._extra,
            exclude_direct_products=self._cfg.exclude_direct_products,
            max_normal_closures=self._cfg.max_normal_closures,
        )
        vector = group_valuation(self._merged, target.id)
        return corpus, vector, build_system(corpus, vector, target_multiplicity, target.id)

    def screen(self, selector: Union[str, tuple], target_multiplicity: int = 1) -> Dict:
        """
        Least-squares screen only.

        :Arguments:
            - selector (str or tuple): Target id or name.
            - target_multiplicity (int, optional): Scale of the right-hand side. Defaults to 1.

        :Returns:
            Dict: Target, system shape and screen outcome.
        """
        target = self._merged.resolve(selector)
        _, _, system = self._system(target, target_multiplicity)
        result = least_squares_screen(system, self._cfg.iter_factor, self._cfg.normal_tol)
        rows, cols = system.shape
        logger.info('[SCREEN] target {} residual {:.3e}'.format(target.label, result.residual))
        data = dict(
            target=dict(id=list(target.id), name=target.name),
            target_multiplicity=target_multiplicity,
            rows=rows,
            cols=cols,
        )
        data.update(_screen_dict(result))
        data['within_tol'] = result.residual < self._cfg.screen_tol
        return data

    def eval(self, selector: Union[str, tuple]) -> SearchResult:
        """
        Run the whole search for one target.

        :Arguments:
            - selector (str or tuple): Target id or name.

        :Returns:
            SearchResult: Status with the certificate and its verification, or the infeasibility witness.
        """
        target = self._merged.resolve(selector)
        corpus, vector, system = self._system(target)
        logger.info(
            '[SEARCH] target {} {} against {} corpus groups, system {}x{}'.format(
                target.label, target.name, len(corpus), *system.shape
            )
        )
        screen = None
        if self._cfg.run_screen:
            screen = least_squares_screen(system, self._cfg.iter_factor, self._cfg.normal_tol)
            logger.info('[SEARCH] screen residual {:.3e}'.format(screen.residual))
            if screen.residual >= self._cfg.screen_tol:
                logger.warning(
                    '[SEARCH] screen residual above {}, target likely outside the span'.format(self._cfg.screen_tol)
                )

        chosen = None
        first_space = None
        for t in range(1, max(1, self._cfg.max_multiplicity) + 1):
            if t > 1:
                system = build_system(corpus, vector, t, target.id)
            result = solve_exact(system)
            if not result.feasible:
                status = STATUS_SOLVABLE_TARGET if target.solvable else STATUS_INFEASIBLE
                logger.warning('[SEARCH] target {} is outside the span of the corpus'.format(target.label))
                return SearchResult(
                    status,
                    target,
                    t,
                    len(corpus),
                    screen,
                    infeasibility=_infeasibility_dict(system, result),
                )
            if first_space is None:
                first_space = (result, system)
            if result.is_integral():
                chosen = (result, system)
                break
        if chosen is None:
            chosen = first_space
            logger.info('[SEARCH] no integral solution up to t = {}, clearing denominators'.format(t))
        space, system = chosen
        certificate = to_certificate(space, system, target.id, system.target_multiplicity)
        verification = verify_certificate(certificate, self._merged)
        if target.solvable:
            status = STATUS_SOLVABLE_TARGET
            logger.warning('[SEARCH] target {} is itself solvable'.format(target.label))
        elif verification.passed:
            status = STATUS_VERIFIED
            logger.info('[SEARCH] certificate for {} verified at t = {}'.format(target.label, system.target_multiplicity))
        else:
            status = STATUS_VERIFICATION_FAILED
            failure = verification.first_failure
            logger.error('[SEARCH] verification failed at {}: {}'.format(failure.name, failure.detail))
        return SearchResult(status, target, system.target_multiplicity, len(corpus), screen, certificate, verification)

