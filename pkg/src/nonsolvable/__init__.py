"""Nonsolvable length of finite permutation groups: stabilizer chains,
solvable radicals and socles, RS-series certificates, rarefied-subgroup
checks and a reproduction harness."""
from .actions import CapExceeded
from .class_l import SimpleId, identify_simple_by_order
from .config import Config
from .constructions import (BuiltGroup, alt, from_recipe, general_linear, linear_lower_bound_group,
                            solvable_l2_witness, special_linear, subdirect_product, sym,
                            wreath_tower, wreath_tower_A5)
from .group import Group, GroupError, group_from_json, group_to_json
from .perm import Permutation, element_order
from .rarefied import (RarefiedReport, check_rarefied, extends_test, find_rarefied_subgroup,
                       lambda_additivity, quotient_stays_rarefied)
from .reports import VerifyReport
from .rs_series import RSCertificate, lam, nonsolvable_length, rs_series, verify_certificate
from .structure import (frattini, max_two_length_over_solvable, minimal_normal_subgroups,
                        socle_nonabelian, solvable_radical, two_length)

__all__ = [
    "BuiltGroup", "CapExceeded", "Config", "Group", "GroupError", "Permutation", "RSCertificate",
    "RarefiedReport", "SimpleId", "VerifyReport", "alt", "check_rarefied", "element_order",
    "extends_test", "find_rarefied_subgroup", "frattini", "from_recipe", "general_linear",
    "group_from_json", "group_to_json", "identify_simple_by_order", "lam", "lambda_additivity",
    "linear_lower_bound_group", "max_two_length_over_solvable", "minimal_normal_subgroups",
    "nonsolvable_length", "quotient_stays_rarefied", "rs_series", "socle_nonabelian",
    "solvable_l2_witness", "solvable_radical", "special_linear", "subdirect_product", "sym",
    "two_length", "verify_certificate", "wreath_tower", "wreath_tower_A5",
]
