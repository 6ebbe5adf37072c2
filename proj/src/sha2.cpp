#include "stepsha/sha2.hpp"

#include <stdexcept>
#include <string>

#include "stepsha/constants.hpp"

namespace stepsha {

std::string_view variant_name(Variant v) {
    return v == Variant::Sha256 ? "sha256" : "sha512";
}

Variant parse_variant(std::string_view name) {
    if (name == "sha256" || name == "SHA-256") return Variant::Sha256;
    if (name == "sha512" || name == "SHA-512") return Variant::Sha512;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

Sha2Params make_params(Variant v) {
    Sha2Params p{};
    p.variant = v;
    if (v == Variant::Sha256) {
        p.word_bits = 32;
        p.mask = 0xffffffffULL;
        for (std::size_t i = 0; i < 8; ++i) p.iv[i] = constants::kIv256[i];
        p.k.assign(constants::kRound256.begin(), constants::kRound256.end());
        p.big_sigma0_rots = {2, 13, 22};
        p.big_sigma1_rots = {6, 11, 25};
        p.small_sigma0 = {7, 18, 3};
        p.small_sigma1 = {17, 19, 10};
        p.max_steps = 64;
    } else {
        p.word_bits = 64;
        p.mask = ~Word{0};
        for (std::size_t i = 0; i < 8; ++i) p.iv[i] = constants::kIv512[i];
        p.k.assign(constants::kRound512.begin(), constants::kRound512.end());
        p.big_sigma0_rots = {28, 34, 39};
        p.big_sigma1_rots = {14, 18, 41};
        p.small_sigma0 = {1, 8, 7};
        p.small_sigma1 = {19, 61, 6};
        p.max_steps = 80;
    }
    return p;
}

const Sha2Params& params_for(Variant v) {
    static const Sha2Params p256 = make_params(Variant::Sha256);
    static const Sha2Params p512 = make_params(Variant::Sha512);
    return v == Variant::Sha256 ? p256 : p512;
}

RegisterState standard_iv(const Sha2Params& params) {
    return RegisterState{params.iv};
}

void check_width(const MessageBlock& block, const Sha2Params& params) {
    for (std::size_t i = 0; i < 16; ++i) {
        if (!params.fits(block[i])) {
            throw std::invalid_argument("message word " + std::to_string(i) + " exceeds " +
                                        std::to_string(params.word_bits) + "-bit width");
        }
    }
}

void check_width(const RegisterState& state, const Sha2Params& params) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (!params.fits(state[i])) {
            throw std::invalid_argument(std::string("register ") + kRegisterNames[i] + " exceeds " +
                                        std::to_string(params.word_bits) + "-bit width");
        }
    }
}

void check_steps(int steps, const Sha2Params& params) {
    if (steps < 1 || steps > params.max_steps) {
        throw std::out_of_range("step count " + std::to_string(steps) + " outside [1, " +
                                std::to_string(params.max_steps) + "] for " +
                                std::string(variant_name(params.variant)));
    }
}

void expand_message_into(const MessageBlock& block, std::span<Word> out, const Sha2Params& p) {
    check_steps(static_cast<int>(out.size()), p);
    const std::size_t n = out.size();
    for (std::size_t t = 0; t < n && t < 16; ++t) out[t] = block[t];
    for (std::size_t t = 16; t < n; ++t) {
        out[t] = (small_sigma1(out[t - 2], p) + out[t - 7] + small_sigma0(out[t - 15], p) + out[t - 16]) &
                 p.mask;
    }
}

std::vector<Word> expand_message(const MessageBlock& block, int steps, const Sha2Params& params) {
    check_steps(steps, params);
    std::vector<Word> w(static_cast<std::size_t>(steps));
    expand_message_into(block, w, params);
    return w;
}

RegisterState run_rounds(const RegisterState& iv, const MessageBlock& block, int steps,
                         const Sha2Params& params) {
    check_steps(steps, params);
    std::array<Word, 80> w;
    expand_message_into(block, std::span<Word>(w.data(), static_cast<std::size_t>(steps)), params);
    RegisterState s = iv;
    for (int t = 0; t < steps; ++t) s = step(s, w[t], params.k[t], params);
    return s;
}

RegisterState compress(const RegisterState& iv, const MessageBlock& block, int steps,
                       const Sha2Params& params) {
    RegisterState s = run_rounds(iv, block, steps, params);
    for (std::size_t i = 0; i < 8; ++i) s[i] = (s[i] + iv[i]) & params.mask;
    return s;
}

void check_message_length(std::uint64_t bytes, Variant v) {
    // SHA-256 carries a 64-bit bit count; SHA-512's 128-bit field holds any 64-bit byte count.
    if (v == Variant::Sha256 && bytes >= (std::uint64_t{1} << 61)) {
        throw std::length_error("message too long for a 64-bit length field");
    }
}

RegisterState digest_padded(std::span<const std::uint8_t> message, Variant v, int steps) {
    const Sha2Params& p = params_for(v);
    check_steps(steps, p);
    check_message_length(message.size(), v);

    const std::size_t word_bytes = p.word_bits / 8;
    const std::size_t block_bytes = 16 * word_bytes;
    const std::size_t length_bytes = 2 * word_bytes;

    std::vector<std::uint8_t> padded(message.begin(), message.end());
    padded.push_back(0x80);
    while (padded.size() % block_bytes != block_bytes - length_bytes) padded.push_back(0);
    const std::uint64_t bit_len = static_cast<std::uint64_t>(message.size()) * 8;
    for (std::size_t i = 0; i < length_bytes; ++i) {
        const std::size_t shift = 8 * (length_bytes - 1 - i);
        padded.push_back(shift < 64 ? static_cast<std::uint8_t>(bit_len >> shift) : 0);
    }

    RegisterState h = standard_iv(p);
    for (std::size_t off = 0; off < padded.size(); off += block_bytes) {
        MessageBlock block;
        for (std::size_t i = 0; i < 16; ++i) {
            Word w = 0;
            for (std::size_t b = 0; b < word_bytes; ++b) w = (w << 8) | padded[off + i * word_bytes + b];
            block[i] = w;
        }
        h = compress(h, block, steps, p);
    }
    return h;
}

RegisterState digest_padded(std::string_view message, Variant v, int steps) {
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(message.data());
    return digest_padded(std::span<const std::uint8_t>(bytes, message.size()), v, steps);
}

}  // namespace stepsha
