"""Rabin encryption over rings of integers of number fields."""

from ._rabin_nf import (
    AccidentalFactorError,
    Ciphertext,
    PrivateKey,
    Profile,
    PublicKey,
    RabinError,
    attack,
    capacity,
    decode,
    decrypt,
    encode,
    encrypt,
    keygen,
    profile,
    profiles,
    sqrt_mod_prime,
    square_roots,
)

__all__ = [
    "AccidentalFactorError",
    "Ciphertext",
    "PrivateKey",
    "Profile",
    "PublicKey",
    "RabinError",
    "attack",
    "capacity",
    "decode",
    "decrypt",
    "encode",
    "encrypt",
    "keygen",
    "profile",
    "profiles",
    "sqrt_mod_prime",
    "square_roots",
]
