'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Verify the published solvable / non-solvable order-type coincidence and print the tables.
'''

from easydict import EasyDict

from core.data import load_catalog
from core.eval import TheoremEvaluator

theorem_config = dict(
    catalog=None,
    enum_cap=10000,
    eval=dict(
        check_rows=True,
        check_products=True,
        emit_tables=True,
        verbose=True,
    ),
)

main_config = EasyDict(theorem_config)


def main(cfg):
    catalog = load_catalog(cfg.catalog, enum_cap=cfg.enum_cap)
    evaluator = TheoremEvaluator(cfg.eval, catalog)
    report = evaluator.eval()
    for title, frame in report.frames.items():
        print('[EVALUATOR]', title)
        print(frame.to_string(index=False))
    for check in report.checks:
        print('[EVALUATOR]', check.name, 'passed' if check.passed else 'FAILED ' + check.detail)
    evaluator.close()
    return report.passed


if __name__ == '__main__':
    main(main_config)
