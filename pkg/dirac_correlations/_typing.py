"""typing compat module"""
import sys
from typing import Type

import numpy as np
import numpy.typing as npt

NoneType: Type = type(None)


if sys.version_info >= (3, 10):
    from typing import TypeAlias, get_args, get_origin, get_type_hints
else:
    from typing_extensions import TypeAlias, get_args, get_origin, get_type_hints

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

# numpy carriers. Shapes are not part of the type, they are checked at runtime
ComplexMatrix: TypeAlias = npt.NDArray[np.complex128]
RealMatrix: TypeAlias = npt.NDArray[np.float64]
Vector3: TypeAlias = npt.NDArray[np.float64]

__all__ = [
    "NoneType",
    "TypeAlias",
    "get_args",
    "get_origin",
    "get_type_hints",
    "Self",
    "ComplexMatrix",
    "RealMatrix",
    "Vector3",
]
