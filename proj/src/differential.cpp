#include "stepsha/differential.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepsha {

Delta word_delta(Word x, Word x_prime, const Sha2Params& params) {
    return Delta{(x_prime - x) & params.mask};
}

Word apply_delta(Word x, Delta d, const Sha2Params& params) {
    return (x + d.value) & params.mask;
}

bool DeltaVector::is_zero() const {
    return std::all_of(regs.begin(), regs.end(), [](Delta d) { return d.is_zero(); });
}

bool WordDeltas::is_zero() const {
    return std::all_of(dw.begin(), dw.end(), [](Delta d) { return d.is_zero(); });
}

DeltaVector state_delta(const RegisterState& s, const RegisterState& s_prime, const Sha2Params& params) {
    DeltaVector v;
    for (std::size_t i = 0; i < 8; ++i) v[i] = word_delta(s[i], s_prime[i], params);
    return v;
}

void check_pair(const CollisionPair& pair) {
    const Sha2Params& p = params_for(pair.variant);
    check_steps(pair.step_count, p);
    check_width(pair.m1, p);
    check_width(pair.m2, p);
}

WordDeltas extract_word_deltas(const CollisionPair& pair) {
    const Sha2Params& p = params_for(pair.variant);
    WordDeltas d;
    for (std::size_t i = 0; i < 16; ++i) d.dw[i] = word_delta(pair.m1[i], pair.m2[i], p);
    return d;
}

MessageBlock apply_word_deltas(const MessageBlock& m1, const WordDeltas& deltas, const Sha2Params& params) {
    MessageBlock m2;
    for (std::size_t i = 0; i < 16; ++i) m2[i] = apply_delta(m1[i], deltas.dw[i], params);
    return m2;
}

std::vector<DeltaVector> trace_pair(const RegisterState& iv, const CollisionPair& pair) {
    const Sha2Params& p = params_for(pair.variant);
    check_pair(pair);
    const auto n = static_cast<std::size_t>(pair.step_count);
    std::array<Word, 80> w1, w2;
    expand_message_into(pair.m1, std::span<Word>(w1.data(), n), p);
    expand_message_into(pair.m2, std::span<Word>(w2.data(), n), p);

    std::vector<DeltaVector> trace;
    trace.reserve(n);
    RegisterState s1 = iv, s2 = iv;
    for (std::size_t t = 0; t < n; ++t) {
        s1 = step(s1, w1[t], p.k[t], p);
        s2 = step(s2, w2[t], p.k[t], p);
        trace.push_back(state_delta(s1, s2, p));
    }
    return trace;
}

std::optional<Divergence> check_path(const std::vector<DeltaVector>& trace, const DifferentialPath& path) {
    if (trace.size() != path.steps.size()) {
        throw std::length_error("trace has " + std::to_string(trace.size()) + " steps, path has " +
                                std::to_string(path.steps.size()));
    }
    for (std::size_t t = 0; t < trace.size(); ++t) {
        for (std::size_t r = 0; r < 8; ++r) {
            if (trace[t][r] != path.steps[t][r]) {
                return Divergence{static_cast<int>(t), static_cast<int>(r), path.steps[t][r], trace[t][r]};
            }
        }
    }
    return std::nullopt;
}

std::string describe(const Divergence& d, const Sha2Params& params) {
    return "first divergence at step " + std::to_string(d.step) + ", register " +
           kRegisterNames[static_cast<std::size_t>(d.reg)] + ": expected " +
           format_delta_signed(d.expected, params) + ", actual " + format_delta_signed(d.actual, params);
}

DifferentialPath builtin_path_sha256_22() {
    constexpr Word kOne = 0x00000001;
    constexpr Word kMinusOne = 0xffffffff;
    DifferentialPath path{Variant::Sha256, std::vector<DeltaVector>(22)};
    auto set = [&](int step, int reg, Word v) { path.steps[step][reg] = Delta{v}; };
    //        a  b  c  d  e  f  g  h
    set(8, 0, kOne);
    set(8, 4, kOne);
    set(9, 1, kOne);
    set(9, 4, kMinusOne);
    set(9, 5, kOne);
    set(10, 2, kOne);
    set(10, 4, kMinusOne);
    set(10, 5, kMinusOne);
    set(10, 6, kOne);
    set(11, 3, kOne);
    set(11, 5, kMinusOne);
    set(11, 6, kMinusOne);
    set(11, 7, kOne);
    set(12, 4, kOne);
    set(12, 6, kMinusOne);
    set(12, 7, kMinusOne);
    set(13, 5, kOne);
    set(13, 7, kMinusOne);
    set(14, 6, kOne);
    set(15, 7, kOne);
    return path;
}

DifferentialPath derive_path(const CollisionPair& pair, const RegisterState& iv) {
    return DifferentialPath{pair.variant, trace_pair(iv, pair)};
}

namespace {

std::string fixed_hex(Word w, unsigned digits) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string s(digits, '0');
    for (unsigned i = 0; i < digits; ++i) s[digits - 1 - i] = kHex[(w >> (4 * i)) & 0xf];
    return s;
}

}  // namespace

std::string format_delta(Delta d, const Sha2Params& params) {
    if (d.is_zero()) return "0";
    return fixed_hex(d.value, params.hex_digits());
}

std::string format_delta_signed(Delta d, const Sha2Params& params) {
    std::string out = fixed_hex(d.value, params.hex_digits());
    const Word top = Word{1} << (params.word_bits - 1);
    if (d.value & top) out += " (-" + std::to_string((~d.value + 1) & params.mask) + ")";
    return out;
}

}  // namespace stepsha
