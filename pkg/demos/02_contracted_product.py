"""
Contracted products and the spin-1 block
========================================

Contracting two fundamental legs through the coproduct gives the R-matrix of
[2]x[2] = [3]+[1]. In a Clebsch-Gordan basis it splits into four blocks; only
the [3](x)[3] block is nontrivial.
"""

import numpy as np

from qtwist import TwistConfig, paired_matrix, standard_data
from qtwist.spectral import block_decompose, cg_isometries
from qtwist.verify import ybe_residual

data = standard_data(1.3)

# widths (2,) means one slot built from two fundamental legs, so 4 legs per side
m = paired_matrix(TwistConfig.standard(1), data, (2,))
print("matrix shape:", m.shape)

dec = block_decompose(m, cg_isometries(data))
print("largest off-block entry:", dec.off_block)

# with the Hecke normalization every block carries the common scalar q^2
print("scale:", dec.scale)
for key, block in dec.normalized().items():
    print(key, block.shape, "identity" if np.allclose(block, np.eye(len(block))) else "nontrivial")

# the 9x9 block is a spin-1 R-matrix in its own right
print("9x9 YBE residual:", ybe_residual(dec.blocks["33"], leg_dim=3))

# the sl2 normalization removes the scalar, so the small blocks are literally 1
sl2 = standard_data(1.3, normalization="sl2")
dec2 = block_decompose(paired_matrix(TwistConfig.standard(1), sl2, (2,)), cg_isometries(sl2))
print("sl2 [1](x)[1] block:", dec2.blocks["11"])
