from .catalog import CatalogEntry, FamilyCatalog, make_entry, minimal_elements
from .enumeration import EnumerationGuardError, clear_catalog_cache, enumerate_unicyclic
from .order import PosetError, PosetRel, compare, first_index
from .trees import rooted_shapes, shape_to_tree
from .verifiers import (
    Restriction,
    VerificationError,
    VerificationReport,
    check_conjecture,
    incomparability_probe,
    predicted_minimal,
    verify_minimal_family,
)
