"""
Depth-D block interleaver: rows are written, columns are read.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field

from rspac.modules.concat.models import ConcatError


class BlockInterleaver(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: int = Field(..., ge=1, description="Depth D")
    cols: int = Field(..., ge=1, description="Row length n")


def interleave(il: BlockInterleaver, rows_data: ArrayLike) -> NDArray[np.uint8]:
    """
    Columns of a D x n byte matrix.

    Returns:
        Array of shape (n, D); entry [j] is (H[0][j], ..., H[D-1][j])

    Raises:
        ConcatError: if the matrix is not D x n
    """
    matrix = np.asarray(rows_data, dtype=np.uint8)
    if matrix.shape != (il.rows, il.cols):
        raise ConcatError(f"matrix shape {matrix.shape} does not match ({il.rows}, {il.cols})")
    return np.ascontiguousarray(matrix.T)


def deinterleave(il: BlockInterleaver, columns: ArrayLike) -> NDArray[np.uint8]:
    """Rebuild the D x n matrix from its n columns."""
    cols = np.asarray(columns, dtype=np.uint8)
    if cols.shape != (il.cols, il.rows):
        raise ConcatError(f"column block shape {cols.shape} does not match ({il.cols}, {il.rows})")
    return np.ascontiguousarray(cols.T)
