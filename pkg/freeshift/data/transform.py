import abc
import functools
from typing import Iterable, TypeVar, Union

from freeshift.group import Word

from .partition import WindowPartition, translate_partition
from .pattern import Pattern, translate_pattern

Shiftable = TypeVar("Shiftable", Pattern, WindowPartition)


class Transform(abc.ABC):
    @abc.abstractmethod
    def __call__(self, data: Shiftable) -> Shiftable:
        raise NotImplementedError


class TranslateTransform(Transform):
    """Right translation by g, on patterns and on window partitions."""

    def __init__(self, g: Word) -> None:
        self.g = g

    def __call__(self, data: Union[Pattern, WindowPartition]):
        if isinstance(data, Pattern):
            return translate_pattern(data, self.g)
        elif isinstance(data, WindowPartition):
            return translate_partition(data, self.g)
        else:
            raise TypeError(f"Cannot translate {type(data).__name__}")


class SequentialTransform(Transform):
    def __init__(self, transforms: Iterable[Transform]) -> None:
        self.transforms = list(transforms)

    def __call__(self, data):
        return functools.reduce(lambda d, t: t(d), self.transforms, data)
