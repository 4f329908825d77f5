# -*- coding: utf-8 -*-
"""
Meta tools for model parameters
"""
from abc import ABCMeta
from contextlib import suppress
from math import isfinite


class QubithermError(Exception):
    """ Base class for all errors raised by qubitherm. """

    pass


def subclasses(cls):
    """ Return a set of subclasses of ``cls``, including sub-subclasses and so on. """
    direct_subclasses = set(cls.__subclasses__())
    return direct_subclasses.union(
        {s for c in direct_subclasses for s in subclasses(c)}
    )


class MetaModel(ABCMeta):
    """
    Metaclass for AbstractModel.

    This metaclass allows to determine the valid parameters that have been defined using the
    ModelParameter class descriptor as class variables. For example, the XXZParams
    class defines the ``J`` and ``delta`` parameters.

    Moreover, all classes generated by MetaModel have an ``implementations`` attribute
    which points to concrete subclasses, both direct and indirect.
    """

    def __init__(cls, clsname, bases, clsdict):
        super().__init__(clsname, bases, clsdict)

        if not hasattr(cls, "valid_parameters"):
            cls.valid_parameters = set([])

        # Only parameters defined via the ModelParameter descriptor will appear in
        # instance.parameters
        local_valid_parameters = {
            name
            for name, parameter in cls.__dict__.items()
            if isinstance(parameter, ModelParameter)
        }
        cls.valid_parameters = cls.valid_parameters.union(local_valid_parameters)

        # Also include valid parameters from all superclasses
        for base in bases:
            with suppress(AttributeError):
                cls.valid_parameters = set.union(
                    cls.valid_parameters, base.valid_parameters
                )

        # Check if a display_name is available; otherwise, it is the name of the class
        if "display_name" not in clsdict:
            cls.display_name = str(cls.__name__)

    @property
    def implementations(self):
        """ Iterable of concrete implementations. This includes direct subclasses, sub-subclasses, and so on. """
        return {c for c in subclasses(self) if not c.__abstractmethods__}


class ModelParameter:
    """
    Descriptor to model parameters, with default values and forced types.

    Parameters
    ----------
    name : str
        Parameter name
    ptype : type or callable
        Parameter type, e.g. float, or callable, e.g. ``tuple``.
    default : object or None
        Default value of the parameter. If None, no default value is set. Hence, the
        default value can never be None.
    """

    __slots__ = ("name", "type", "default")

    def __init__(self, name, ptype, default=None):
        self.name = name
        self.type = ptype
        self.default = default

    def __get__(self, instance, cls):
        if instance is None:
            return self
        return instance.__dict__.get(self.name, self.default)

    def __set__(self, instance, value):
        """
        If the value cannot be cast to the expected type, a TypeError is raised.
        Non-finite numbers are rejected with a ValueError.
        """
        try:
            value = self.type(value)
        except (ValueError, TypeError):
            raise TypeError(
                f"Model parameter {self.name} expects values of type {self.type}, but received {value!r}"
            )

        components = value if isinstance(value, tuple) else (value,)
        if not all(isfinite(c) for c in components):
            raise ValueError(
                f"Model parameter {self.name} must be finite, but received {value!r}"
            )
        instance.__dict__[self.name] = value
