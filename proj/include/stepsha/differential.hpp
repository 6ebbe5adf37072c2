#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stepsha/sha2.hpp"

namespace stepsha {

/// Modular difference X' - X mod 2^width, stored as a plain word.
struct Delta {
    Word value = 0;

    bool is_zero() const { return value == 0; }
    friend bool operator==(const Delta&, const Delta&) = default;
};

Delta word_delta(Word x, Word x_prime, const Sha2Params& params);
Word apply_delta(Word x, Delta d, const Sha2Params& params);

/// Register differences (da..dh) at the end of one step.
struct DeltaVector {
    std::array<Delta, 8> regs{};

    Delta& operator[](std::size_t i) { return regs[i]; }
    const Delta& operator[](std::size_t i) const { return regs[i]; }
    bool is_zero() const;
    friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

DeltaVector state_delta(const RegisterState& s, const RegisterState& s_prime, const Sha2Params& params);

struct DifferentialPath {
    Variant variant = Variant::Sha256;
    std::vector<DeltaVector> steps;

    friend bool operator==(const DifferentialPath&, const DifferentialPath&) = default;
};

struct WordDeltas {
    std::array<Delta, 16> dw{};

    bool is_zero() const;
    friend bool operator==(const WordDeltas&, const WordDeltas&) = default;
};

struct CollisionPair {
    Variant variant = Variant::Sha256;
    int step_count = 22;
    MessageBlock m1;
    MessageBlock m2;

    friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

/// Throws std::invalid_argument on width violations and std::out_of_range on the step count.
void check_pair(const CollisionPair& pair);

WordDeltas extract_word_deltas(const CollisionPair& pair);
MessageBlock apply_word_deltas(const MessageBlock& m1, const WordDeltas& deltas, const Sha2Params& params);

/// Entry i is the delta of the two register states at the end of step i.
std::vector<DeltaVector> trace_pair(const RegisterState& iv, const CollisionPair& pair);

struct Divergence {
    int step;
    int reg;  // index into kRegisterNames
    Delta expected;
    Delta actual;

    friend bool operator==(const Divergence&, const Divergence&) = default;
};

/// Empty result means MATCH. Throws std::length_error when the lengths differ.
std::optional<Divergence> check_path(const std::vector<DeltaVector>& trace, const DifferentialPath& path);

std::string describe(const Divergence& d, const Sha2Params& params);

/// The 22-step SHA-256 path followed by the built-in SHA-256 pair; -1 entries are
/// stored as the all-ones word.
DifferentialPath builtin_path_sha256_22();

DifferentialPath derive_path(const CollisionPair& pair, const RegisterState& iv);

/// "0" for zero, fixed-width lowercase hex otherwise, e.g. "00000001".
std::string format_delta(Delta d, const Sha2Params& params);
/// Hex plus the signed reading when the top bit is set, e.g. "ffffffff (-1)".
std::string format_delta_signed(Delta d, const Sha2Params& params);

}  // namespace stepsha
