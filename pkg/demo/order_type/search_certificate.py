'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Search multiplicity certificates for a few targets and save the verified ones.
'''
import os

from easydict import EasyDict

from core.data import load_catalog
from core.eval import CertificateSearcher, STATUS_VERIFIED
from core.utils.data_utils.data_writter import write_json

search_config = dict(
    catalog=None,
    extra_corpus=None,
    enum_cap=10000,
    targets=['GL(3,2)', 'A_5'],
    result_dir='./certificates',
    search=dict(
        max_multiplicity=8,
        exclude_direct_products=False,
    ),
)

main_config = EasyDict(search_config)


def main(cfg):
    catalog = load_catalog(cfg.catalog, enum_cap=cfg.enum_cap)
    extra = load_catalog(cfg.extra_corpus, enum_cap=cfg.enum_cap) if cfg.extra_corpus else None
    searcher = CertificateSearcher(cfg.search, catalog, extra)
    os.makedirs(cfg.result_dir, exist_ok=True)
    for target in cfg.targets:
        result = searcher.eval(target)
        print('[EVALUATOR]', target, result.status)
        if result.status == STATUS_VERIFIED:
            name = '{}_{}.json'.format(*result.target.id)
            write_json(os.path.join(cfg.result_dir, name), result.to_dict())
    searcher.close()


if __name__ == '__main__':
    main(main_config)
