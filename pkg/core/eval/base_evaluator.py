'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Base class of the catalog evaluators.
'''

import copy
from abc import abstractmethod
from typing import Any, Dict
from easydict import EasyDict

from core.data import Catalog


class BaseEvaluator(object):
    """
    Base class of evaluators running a pipeline over a loaded catalog. Subclasses declare their defaults in the
    class-level ``config`` dict; a partial ``cfg`` is completed from them.

    :Arguments:
        - cfg (Dict): Config dict.
        - catalog (Catalog, optional): Catalog the evaluator reads groups from.

    :Interfaces: reset, eval, close

    :Properties:
        - catalog (Catalog): Catalog in use.
    """

    config = dict()

    def __init__(
            self,
            cfg: Dict,
            catalog: Catalog = None,
    ) -> None:
        if 'cfg_type' not in cfg:
            self._cfg = self.__class__.default_config()
            self._cfg.update(cfg)
        else:
            self._cfg = cfg

        if catalog is not None:
            self.catalog = catalog

    @property
    def catalog(self) -> Catalog:
        return self._catalog

    @catalog.setter
    def catalog(self, _catalog: Catalog) -> None:
        self._catalog = _catalog

    @abstractmethod
    def reset(self) -> Any:
        raise NotImplementedError

    @abstractmethod
    def close(self) -> Any:
        raise NotImplementedError

    @abstractmethod
    def eval(self) -> Any:
        raise NotImplementedError

    @classmethod
    def default_config(cls: type) -> EasyDict:
        cfg = EasyDict(cls.config)
        cfg.cfg_type = cls.__name__ + 'Config'
        return copy.deepcopy(cfg)
