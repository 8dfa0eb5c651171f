from trussalg._core import (
    ArithmeticOverflowError,
    CapacityError,
    CohomologyReport,
    Group,
    IsoClassReport,
    NijenhuisReport,
    StructuralError,
    Truss,
    ZTruss,
    addition_truss,
    affine_verify,
    check_nijenhuis,
    classify_z,
    coboundary,
    cohomology,
    compatible,
    deformed_truss,
    derivations,
    enumerate_truss_structures,
    heap_endomorphisms,
    left_projection_truss,
    nijenhuis_product_table,
    standard_products,
    torsion_table,
    z_is_nijenhuis,
    z_torsion_polynomial,
)

__all__ = [
    "ArithmeticOverflowError",
    "CapacityError",
    "CohomologyReport",
    "Group",
    "IsoClassReport",
    "NijenhuisReport",
    "StructuralError",
    "Truss",
    "ZTruss",
    "addition_truss",
    "affine_verify",
    "check_nijenhuis",
    "classify_z",
    "coboundary",
    "cohomology",
    "compatible",
    "deformed_truss",
    "derivations",
    "enumerate_truss_structures",
    "heap_endomorphisms",
    "left_projection_truss",
    "nijenhuis_product_table",
    "standard_products",
    "torsion_table",
    "z_is_nijenhuis",
    "z_torsion_polynomial",
]
