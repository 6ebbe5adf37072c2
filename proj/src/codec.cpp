#include "stepsha/codec.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "json.hpp"

namespace stepsha {

using nlohmann::json;

ParseError::ParseError(std::size_t token_index, const std::string& what)
    : std::runtime_error("token " + std::to_string(token_index) + ": " + what), token_index_(token_index) {}

DecodeError::DecodeError(std::string field, const std::string& what)
    : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

std::string format_word(Word w, const Sha2Params& params) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%0*llx", static_cast<int>(params.hex_digits()),
                  static_cast<unsigned long long>(w));
    return buf;
}

bool parse_word(std::string_view token, const Sha2Params& params, Word& out) {
    if (token.size() != params.hex_digits()) return false;
    Word w = 0;
    for (char c : token) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else return false;
        w = (w << 4) | static_cast<Word>(v);
    }
    out = w;
    return true;
}

namespace {

std::vector<std::string_view> hex_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        if (first < line.size() && line[first] == '#') continue;

        std::size_t i = first;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
    }
    return tokens;
}

template <std::size_t N>
std::array<Word, N> parse_words(std::string_view text, Variant v) {
    const Sha2Params& p = params_for(v);
    const auto tokens = hex_tokens(text);
    std::array<Word, N> words{};
    for (std::size_t i = 0; i < N; ++i) {
        if (i >= tokens.size()) {
            throw ParseError(i, "expected " + std::to_string(N) + " words, found " + std::to_string(tokens.size()));
        }
        if (!parse_word(tokens[i], p, words[i])) {
            throw ParseError(i, "'" + std::string(tokens[i]) + "' is not a " + std::to_string(p.hex_digits()) +
                                    "-digit hex word");
        }
    }
    if (tokens.size() > N) {
        throw ParseError(N, "expected " + std::to_string(N) + " words, found " + std::to_string(tokens.size()));
    }
    return words;
}

Word word_field(const json& j, const std::string& field, const Sha2Params& p) {
    if (!j.is_string()) throw DecodeError(field, "expected a hex string");
    const auto& s = j.get_ref<const std::string&>();
    Word w;
    if (!parse_word(s, p, w)) {
        throw DecodeError(field, "'" + s + "' is not a " + std::to_string(p.hex_digits()) + "-digit hex word");
    }
    return w;
}

const json& member(const json& j, const char* key, const std::string& prefix) {
    const std::string field = prefix.empty() ? key : prefix + "." + key;
    if (!j.is_object()) throw DecodeError(prefix.empty() ? "<root>" : prefix, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw DecodeError(field, "missing field");
    return *it;
}

template <class T>
T number_field(const json& j, const char* key, const std::string& prefix) {
    const json& v = member(j, key, prefix);
    const std::string field = prefix.empty() ? key : prefix + "." + key;
    if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw DecodeError(field, "expected a number");
    } else if constexpr (std::is_unsigned_v<T>) {
        if (!v.is_number_unsigned()) throw DecodeError(field, "expected a non-negative integer");
    } else {
        if (!v.is_number_integer()) throw DecodeError(field, "expected an integer");
    }
    return v.get<T>();
}

std::string string_field(const json& j, const char* key, const std::string& prefix) {
    const json& v = member(j, key, prefix);
    if (!v.is_string()) throw DecodeError(prefix.empty() ? key : prefix + "." + key, "expected a string");
    return v.get<std::string>();
}

Variant variant_field(const json& j, const std::string& prefix) {
    const std::string name = string_field(j, "variant", prefix);
    try {
        return parse_variant(name);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(prefix.empty() ? "variant" : prefix + ".variant", e.what());
    }
}

json block_json(const MessageBlock& b, const Sha2Params& p) {
    json arr = json::array();
    for (Word w : b.words) arr.push_back(format_word(w, p));
    return arr;
}

MessageBlock block_from_json(const json& j, const std::string& field, const Sha2Params& p) {
    if (!j.is_array()) throw DecodeError(field, "expected an array of 16 hex words");
    if (j.size() != 16) throw DecodeError(field, "expected 16 words, found " + std::to_string(j.size()));
    MessageBlock b;
    for (std::size_t i = 0; i < 16; ++i) b[i] = word_field(j[i], field + "[" + std::to_string(i) + "]", p);
    return b;
}

json pair_json(const CollisionPair& pair) {
    const Sha2Params& p = params_for(pair.variant);
    return json{{"variant", variant_name(pair.variant)},
                {"steps", pair.step_count},
                {"m1", block_json(pair.m1, p)},
                {"m2", block_json(pair.m2, p)}};
}

CollisionPair pair_from_json(const json& j, const std::string& prefix) {
    auto at = [&](const char* k) { return prefix.empty() ? std::string(k) : prefix + "." + k; };
    CollisionPair pair;
    pair.variant = variant_field(j, prefix);
    const Sha2Params& p = params_for(pair.variant);
    pair.step_count = number_field<int>(j, "steps", prefix);
    if (pair.step_count < 1 || pair.step_count > p.max_steps) {
        throw DecodeError(at("steps"), "step count " + std::to_string(pair.step_count) + " out of range");
    }
    pair.m1 = block_from_json(member(j, "m1", prefix), at("m1"), p);
    pair.m2 = block_from_json(member(j, "m2", prefix), at("m2"), p);
    return pair;
}

constexpr const char* kDeltaKeys[8] = {"da", "db", "dc", "dd", "de", "df", "dg", "dh"};

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DecodeError("<root>", "not valid JSON");
    return j;
}

}  // namespace

MessageBlock parse_block(std::string_view text, Variant v) {
    return MessageBlock{parse_words<16>(text, v)};
}

std::string format_block(const MessageBlock& block, Variant v) {
    const Sha2Params& p = params_for(v);
    std::string out;
    for (std::size_t i = 0; i < 16; ++i) {
        out += format_word(block[i], p);
        out += (i % 8 == 7) ? '\n' : ' ';
    }
    return out;
}

RegisterState parse_iv(std::string_view text, Variant v) {
    return RegisterState{parse_words<8>(text, v)};
}

std::string encode_pair(const CollisionPair& pair) {
    return pair_json(pair).dump(2) + "\n";
}

CollisionPair decode_pair(std::string_view json_text) {
    return pair_from_json(parse_json(json_text), "");
}

std::string encode_path(const DifferentialPath& path) {
    const Sha2Params& p = params_for(path.variant);
    json steps = json::array();
    for (const DeltaVector& row : path.steps) {
        json r = json::object();
        for (std::size_t i = 0; i < 8; ++i) r[kDeltaKeys[i]] = format_word(row[i].value, p);
        steps.push_back(std::move(r));
    }
    return json{{"variant", variant_name(path.variant)}, {"steps", std::move(steps)}}.dump(2) + "\n";
}

DifferentialPath decode_path(std::string_view json_text) {
    const json j = parse_json(json_text);
    DifferentialPath path;
    path.variant = variant_field(j, "");
    const Sha2Params& p = params_for(path.variant);
    const json& steps = member(j, "steps", "");
    if (!steps.is_array()) throw DecodeError("steps", "expected an array");
    for (std::size_t t = 0; t < steps.size(); ++t) {
        const std::string prefix = "steps[" + std::to_string(t) + "]";
        DeltaVector row;
        for (std::size_t i = 0; i < 8; ++i) {
            row[i] = Delta{word_field(member(steps[t], kDeltaKeys[i], prefix), prefix + "." + kDeltaKeys[i], p)};
        }
        path.steps.push_back(row);
    }
    return path;
}

std::string encode_report(const SearchReport& r) {
    json collisions = json::array();
    for (const StoredCollision& c : r.collisions) {
        json entry = pair_json(c.pair);
        entry["trial"] = c.trial;
        collisions.push_back(std::move(entry));
    }
    json hist = json::object();
    for (const auto& [step, count] : r.divergence_histogram) hist[std::to_string(step)] = count;
    json j{{"strategy", r.strategy},
           {"note", r.note},
           {"variant", variant_name(r.variant)},
           {"steps", r.steps},
           {"seed", r.seed},
           {"trials", r.trials},
           {"successes", r.successes},
           {"collisions", std::move(collisions)},
           {"unlisted_successes", r.unlisted_successes},
           {"path_checked", r.path_checked},
           {"divergence_histogram", std::move(hist)},
           {"elapsed_seconds", r.elapsed_seconds}};
    return j.dump(2) + "\n";
}

SearchReport decode_report(std::string_view json_text) {
    const json j = parse_json(json_text);
    SearchReport r;
    r.strategy = string_field(j, "strategy", "");
    r.note = string_field(j, "note", "");
    r.variant = variant_field(j, "");
    r.steps = number_field<int>(j, "steps", "");
    r.seed = number_field<std::uint64_t>(j, "seed", "");
    r.trials = number_field<std::uint64_t>(j, "trials", "");
    r.successes = number_field<std::uint64_t>(j, "successes", "");
    if (r.successes > r.trials) throw DecodeError("successes", "exceeds trials");
    r.unlisted_successes = number_field<std::uint64_t>(j, "unlisted_successes", "");

    const json& collisions = member(j, "collisions", "");
    if (!collisions.is_array()) throw DecodeError("collisions", "expected an array");
    for (std::size_t i = 0; i < collisions.size(); ++i) {
        const std::string prefix = "collisions[" + std::to_string(i) + "]";
        StoredCollision c;
        c.trial = number_field<std::uint64_t>(collisions[i], "trial", prefix);
        c.pair = pair_from_json(collisions[i], prefix);
        if (c.pair.variant != r.variant) throw DecodeError(prefix + ".variant", "differs from report variant");
        r.collisions.push_back(std::move(c));
    }

    const json& path_checked = member(j, "path_checked", "");
    if (!path_checked.is_boolean()) throw DecodeError("path_checked", "expected a boolean");
    r.path_checked = path_checked.get<bool>();

    const json& hist = member(j, "divergence_histogram", "");
    if (!hist.is_object()) throw DecodeError("divergence_histogram", "expected an object");
    for (const auto& [key, count] : hist.items()) {
        const std::string field = "divergence_histogram." + key;
        int step = 0;
        try {
            std::size_t used = 0;
            step = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw DecodeError(field, "key is not a step index");
        }
        if (!count.is_number_unsigned()) throw DecodeError(field, "expected a non-negative integer");
        r.divergence_histogram[step] = count.get<std::uint64_t>();
    }
    r.elapsed_seconds = number_field<double>(j, "elapsed_seconds", "");
    return r;
}

}  // namespace stepsha
