#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepsha/differential.hpp"
#include "stepsha/report.hpp"

namespace stepsha {

/// Malformed whitespace-hex text. `token_index` is the 0-based index of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t token_index, const std::string& what);
    std::size_t token_index() const { return token_index_; }

private:
    std::size_t token_index_;
};

/// Malformed JSON container. `field()` is a path such as "m1[3]" or "steps[8].da".
class DecodeError : public std::runtime_error {
public:
    DecodeError(std::string field, const std::string& what);
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

std::string format_word(Word w, const Sha2Params& params);
/// Strict fixed-width hex; case-insensitive. Returns false on any violation.
bool parse_word(std::string_view token, const Sha2Params& params, Word& out);

// Block files: 16 whitespace-separated hex words; lines starting with '#' are comments.
MessageBlock parse_block(std::string_view text, Variant v);
std::string format_block(const MessageBlock& block, Variant v);

/// 8 hex words a..h in the block-file syntax.
RegisterState parse_iv(std::string_view text, Variant v);

std::string encode_pair(const CollisionPair& pair);
CollisionPair decode_pair(std::string_view json_text);

std::string encode_path(const DifferentialPath& path);
DifferentialPath decode_path(std::string_view json_text);

std::string encode_report(const SearchReport& report);
SearchReport decode_report(std::string_view json_text);

}  // namespace stepsha
