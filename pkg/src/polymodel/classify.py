"""
Eilenberg–Mac Lane 判定：Z_K(EG,G) 无高阶同伦 ⟺ K 是旗复形
非旗时给出极小非面 σ，并验证 Z_{∂σ}(I,{0,1}) 的约化同调恰为 S^{k−1} 的同调
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from src.homology.chain import HomologyGroup
from src.polymodel.cubical import polyproduct_homology
from src.simplicial.model import FaceSubset, SimplicialComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EMReport:
    aspherical: bool
    witness: Optional[FaceSubset] = None
    sphere_degree: Optional[int] = None
    sphere_homology: List[HomologyGroup] = field(default_factory=list)
    sphere_verified: Optional[bool] = None

    def to_dict(self) -> dict:
        data = {"aspherical": self.aspherical}
        if self.witness is not None:
            data.update(
                witness=list(self.witness),
                sphere_degree=self.sphere_degree,
                sphere_homology=[str(g) for g in self.sphere_homology],
                sphere_verified=self.sphere_verified,
            )
        return data


def classify_em(complex_: SimplicialComplex) -> EMReport:
    if complex_.is_flag():
        return EMReport(aspherical=True)

    nonfaces = complex_.minimal_nonfaces(3)
    witness = min(nonfaces, key=lambda s: (len(s), s))
    k = len(witness)
    boundary, _ = complex_.full_subcomplex(witness)
    homology = polyproduct_homology(boundary, [2] * k)
    verified = all(
        group == (HomologyGroup(1) if degree == k - 1 else HomologyGroup())
        for degree, group in enumerate(homology)
    ) and len(homology) > k - 1
    if not verified:
        logger.warning(f"极小非面 {witness} 上的球面同调验证失败: {[str(g) for g in homology]}")
    return EMReport(
        aspherical=False,
        witness=witness,
        sphere_degree=k - 1,
        sphere_homology=homology,
        sphere_verified=verified,
    )
