#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nfrs/text_format.hpp"

namespace nfrs::text::detail {

enum class TokenKind
{
    Word,    // keyword or bare identifier
    String,  // double-quoted, escapes already decoded
    LBrace,
    RBrace,
    Colon,
    Dot,
    Arrow,   // ->
    BiArrow, // <->
    End
};

struct Token
{
    TokenKind kind = TokenKind::End;
    std::string text;
    SourceLocation location;
};

std::string describe(const Token& tok);

/// Tokenizes the whole input. Lexical errors are appended to `errors`; the
/// offending characters are skipped so parsing can continue.
std::vector<Token> tokenize(std::string_view input, std::vector<ParseError>& errors);

} // namespace nfrs::text::detail
