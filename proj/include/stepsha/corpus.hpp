#pragma once

#include <span>
#include <string>

#include "stepsha/differential.hpp"

namespace stepsha {

/// Published 22-step colliding pairs and the SHA-256 path they follow.
struct VectorCorpus {
    CollisionPair sha256_pair;
    CollisionPair sha512_pair;
    DifferentialPath sha256_path;
};

const VectorCorpus& builtin_corpus();

/// Published full-round digests used to check the core against the standard.
struct StandardVector {
    Variant variant;
    const char* message;
    const char* digest_hex;
};

std::span<const StandardVector> standard_vectors();

/// Concatenated fixed-width hex of all eight words.
std::string digest_hex(const RegisterState& digest, Variant v);

/// The SHA-256 pair's first message in block-file form.
extern const char* const kSha256FirstMessageText;

}  // namespace stepsha
