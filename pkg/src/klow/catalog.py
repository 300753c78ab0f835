"""Named catalog of the finite rings, rational algebras, and ring
extensions the test suite and CLI operate on."""

import functools

from . import excision, homology, rings
from .errors import BadInput

RING_SPECS = {
    "Z2": {"kind": "zmod", "params": {"n": 2}},
    "Z3": {"kind": "zmod", "params": {"n": 3}},
    "Z4": {"kind": "zmod", "params": {"n": 4}},
    "Z5": {"kind": "zmod", "params": {"n": 5}},
    "Z6": {"kind": "zmod", "params": {"n": 6}},
    "F2": {"kind": "gf", "params": {"p": 2, "k": 1}},
    "F3": {"kind": "gf", "params": {"p": 3, "k": 1}},
    "F4": {"kind": "gf", "params": {"p": 2, "k": 2}},
    "F5": {"kind": "gf", "params": {"p": 5, "k": 1}},
    "F2xF2": {"kind": "product",
              "params": {"r1": {"kind": "gf", "params": {"p": 2, "k": 1}},
                         "r2": {"kind": "gf", "params": {"p": 2, "k": 1}}}},
    "F3xF3": {"kind": "product",
              "params": {"r1": {"kind": "gf", "params": {"p": 3, "k": 1}},
                         "r2": {"kind": "gf", "params": {"p": 3, "k": 1}}}},
    "M2F2": {"kind": "matrix",
             "params": {"base": {"kind": "gf", "params": {"p": 2, "k": 1}},
                        "n": 2}},
    "T2F3": {"kind": "triangular2",
             "params": {"base": {"kind": "gf", "params": {"p": 3, "k": 1}}}},
    "F2eps": {"kind": "dual",
              "params": {"base": {"kind": "gf", "params": {"p": 2, "k": 1}}}},
    "F3eps": {"kind": "dual",
              "params": {"base": {"kind": "gf", "params": {"p": 3, "k": 1}}}},
    "SQ2": {"kind": "square_zero", "params": {"n": 2}},
    "SQ3": {"kind": "square_zero", "params": {"n": 3}},
}


@functools.lru_cache(maxsize=None)
def ring(name):
    if name not in RING_SPECS:
        raise BadInput(f"unknown ring {name!r}; known: "
                       + ", ".join(sorted(RING_SPECS)))
    spec = dict(RING_SPECS[name])
    spec["name"] = name
    return rings.construct_ring(spec)


def ring_names():
    return sorted(RING_SPECS)


# ---------------------------------------------------------------------------
# extensions 0 -> I -> B -> C -> 0, as (B, ideal, C, proj, section)

def _ext_z4():
    # 0 -> 2Z/4 -> Z/4 -> F2 -> 0
    B, C = ring("Z4"), ring("F2")
    return excision.make_extension(B, {0, 2}, C, [x % 2 for x in range(4)],
                                   section=None, name="Z4_mod2")


def _ext_f3eps():
    # 0 -> eps.F3 -> F3[eps] -> F3 -> 0, split by the constants
    B, C = ring("F3eps"), ring("F3")
    return excision.make_extension(B, {0, 1, 2}, C,
                                   [x // 3 for x in range(9)],
                                   section=[0, 3, 6], name="F3eps_aug")


def _ext_split():
    # 0 -> F3 x 0 -> F3 x F3 -> F3 -> 0, split by the diagonal-free section
    B, C = ring("F3xF3"), ring("F3")
    return excision.make_extension(B, {0, 3, 6}, C,
                                   [x % 3 for x in range(9)],
                                   section=[0, 1, 2], name="F3xF3_second")


EXTENSION_BUILDERS = {
    "Z4_mod2": _ext_z4,
    "F3eps_aug": _ext_f3eps,
    "F3xF3_second": _ext_split,
}


@functools.lru_cache(maxsize=None)
def extension(name):
    if name not in EXTENSION_BUILDERS:
        raise BadInput(f"unknown extension {name!r}; known: "
                       + ", ".join(sorted(EXTENSION_BUILDERS)))
    return EXTENSION_BUILDERS[name]()


def extension_names():
    return sorted(EXTENSION_BUILDERS)


# ---------------------------------------------------------------------------
# rational algebras

def _m2q_constants():
    def mul(i, j):
        a, b = divmod(i, 2)
        c, d = divmod(j, 2)
        out = [0] * 4
        if b == c:
            out[2 * a + d] = 1
        return tuple(out)
    return tuple(tuple(mul(i, j) for j in range(4)) for i in range(4))


ALGEBRA_SPECS = {
    # (dim, constants, unit); constants[i][j][k] gives e_i.e_j in the basis
    "Q": (1, (((1,),),), (1,)),
    "QxQ": (2, (((1, 0), (0, 0)), ((0, 0), (0, 1))), (1, 1)),
    "M2Q": (4, _m2q_constants(), (1, 0, 0, 1)),
    "Qeps": (2, (((1, 0), (0, 1)), ((0, 1), (0, 0))), (1, 0)),
    # one-dimensional square-zero algebra: u.u = 0
    "SQ1": (1, (((0,),),), None),
    # augmentation ideal of Q[Z/2], spanned by u = g - 1 with u.u = -2u
    "IC2": (1, (((-2,),),), None),
}


@functools.lru_cache(maxsize=None)
def algebra(name):
    if name not in ALGEBRA_SPECS:
        raise BadInput(f"unknown algebra {name!r}; known: "
                       + ", ".join(sorted(ALGEBRA_SPECS)))
    dim, constants, unit = ALGEBRA_SPECS[name]
    return homology.make_algebra(name, dim, constants, unit)


def algebra_names():
    return sorted(ALGEBRA_SPECS)
