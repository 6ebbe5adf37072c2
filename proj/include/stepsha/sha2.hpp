#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace stepsha {

/// One hash word. SHA-256 values occupy the low 32 bits; the upper bits are always zero.
using Word = std::uint64_t;

enum class Variant { Sha256, Sha512 };

std::string_view variant_name(Variant v);  // "sha256" / "sha512"
Variant parse_variant(std::string_view name);  // throws std::invalid_argument

struct SigmaSpec {
    unsigned rot1;
    unsigned rot2;
    unsigned shift;
};

/// Variant-specific constant set. Built once and shared read-only.
struct Sha2Params {
    Variant variant;
    unsigned word_bits;
    Word mask;
    std::array<Word, 8> iv;
    std::vector<Word> k;
    std::array<unsigned, 3> big_sigma0_rots;
    std::array<unsigned, 3> big_sigma1_rots;
    SigmaSpec small_sigma0;
    SigmaSpec small_sigma1;
    int max_steps;

    bool fits(Word w) const { return (w & ~mask) == 0; }
    unsigned hex_digits() const { return word_bits / 4; }
};

Sha2Params make_params(Variant v);

/// Process-wide instances of make_params(v).
const Sha2Params& params_for(Variant v);

struct MessageBlock {
    std::array<Word, 16> words{};

    Word& operator[](std::size_t i) { return words[i]; }
    Word operator[](std::size_t i) const { return words[i]; }
    friend bool operator==(const MessageBlock&, const MessageBlock&) = default;
};

/// Working registers a..h, stored in that order.
struct RegisterState {
    std::array<Word, 8> regs{};

    Word& operator[](std::size_t i) { return regs[i]; }
    Word operator[](std::size_t i) const { return regs[i]; }
    friend bool operator==(const RegisterState&, const RegisterState&) = default;
};

inline constexpr std::array<char, 8> kRegisterNames = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};

RegisterState standard_iv(const Sha2Params& params);

/// Throws std::invalid_argument if any word exceeds the variant width.
void check_width(const MessageBlock& block, const Sha2Params& params);
void check_width(const RegisterState& state, const Sha2Params& params);

/// Throws std::out_of_range unless 1 <= steps <= params.max_steps.
void check_steps(int steps, const Sha2Params& params);

// Round primitives. All arithmetic is modulo 2^word_bits.
inline Word rotr(Word x, unsigned n, const Sha2Params& p) {
    return ((x >> n) | (x << (p.word_bits - n))) & p.mask;
}
inline Word ch(Word x, Word y, Word z) { return (x & y) ^ (~x & z); }
inline Word maj(Word x, Word y, Word z) { return (x & y) ^ (x & z) ^ (y & z); }
inline Word big_sigma0(Word x, const Sha2Params& p) {
    return rotr(x, p.big_sigma0_rots[0], p) ^ rotr(x, p.big_sigma0_rots[1], p) ^
           rotr(x, p.big_sigma0_rots[2], p);
}
inline Word big_sigma1(Word x, const Sha2Params& p) {
    return rotr(x, p.big_sigma1_rots[0], p) ^ rotr(x, p.big_sigma1_rots[1], p) ^
           rotr(x, p.big_sigma1_rots[2], p);
}
inline Word small_sigma0(Word x, const Sha2Params& p) {
    return rotr(x, p.small_sigma0.rot1, p) ^ rotr(x, p.small_sigma0.rot2, p) ^
           (x >> p.small_sigma0.shift);
}
inline Word small_sigma1(Word x, const Sha2Params& p) {
    return rotr(x, p.small_sigma1.rot1, p) ^ rotr(x, p.small_sigma1.rot2, p) ^
           (x >> p.small_sigma1.shift);
}

/// Writes W_0..W_{out.size()-1} of the message schedule. out.size() must be in [1, max_steps].
void expand_message_into(const MessageBlock& block, std::span<Word> out, const Sha2Params& params);

std::vector<Word> expand_message(const MessageBlock& block, int steps, const Sha2Params& params);

/// One round: T1 = h + Σ1(e) + Ch(e,f,g) + k + w, T2 = Σ0(a) + Maj(a,b,c).
inline RegisterState step(const RegisterState& s, Word w, Word k, const Sha2Params& p) {
    const Word t1 = (s[7] + big_sigma1(s[4], p) + ch(s[4], s[5], s[6]) + k + w) & p.mask;
    const Word t2 = (big_sigma0(s[0], p) + maj(s[0], s[1], s[2])) & p.mask;
    return RegisterState{{(t1 + t2) & p.mask, s[0], s[1], s[2], (s[3] + t1) & p.mask, s[4], s[5], s[6]}};
}

/// Register state after `steps` rounds from `iv`, without the feedforward.
RegisterState run_rounds(const RegisterState& iv, const MessageBlock& block, int steps,
                         const Sha2Params& params);

/// Step-reduced compression: `steps` rounds from `iv` followed by the Davies-Meyer feedforward.
RegisterState compress(const RegisterState& iv, const MessageBlock& block, int steps,
                       const Sha2Params& params);

/// Throws std::length_error if a message of `bytes` bytes does not fit the length field.
void check_message_length(std::uint64_t bytes, Variant v);

/// Padded multi-block hash with every block compressed using `steps` rounds.
/// With steps == max_steps this is the standard SHA-256 / SHA-512 digest.
RegisterState digest_padded(std::span<const std::uint8_t> message, Variant v, int steps);
RegisterState digest_padded(std::string_view message, Variant v, int steps);

}  // namespace stepsha
