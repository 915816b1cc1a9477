#include "lexer.hpp"

#include <cctype>
#include <optional>

namespace nfrs::text::detail {

std::string describe(const Token& tok)
{
    switch (tok.kind)
    {
    case TokenKind::Word: return "'" + tok.text + "'";
    case TokenKind::String: return "string " + quote(tok.text);
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::BiArrow: return "'<->'";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

class Cursor
{
public:
    explicit Cursor(std::string_view in)
        : m_in(in)
    {
    }

    bool done() const { return m_pos >= m_in.size(); }
    char peek(std::size_t ahead = 0) const
    {
        return m_pos + ahead < m_in.size() ? m_in[m_pos + ahead] : '\0';
    }
    SourceLocation where() const { return {m_line, m_column}; }

    char advance()
    {
        char c = m_in[m_pos++];
        if (c == '\n')
        {
            ++m_line;
            m_column = 1;
        }
        else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80)
        {
            // columns count code points, not bytes
            ++m_column;
        }
        return c;
    }

private:
    std::string_view m_in;
    std::size_t m_pos = 0;
    unsigned m_line = 1;
    unsigned m_column = 1;
};

bool is_word_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

void append_utf8(std::string& out, unsigned cp)
{
    if (cp < 0x80)
        out += static_cast<char>(cp);
    else if (cp < 0x800)
    {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    else
    {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

std::optional<unsigned> hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f')
        return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F')
        return static_cast<unsigned>(c - 'A' + 10);
    return std::nullopt;
}

Token lex_string(Cursor& cur, std::vector<ParseError>& errors)
{
    Token tok{TokenKind::String, {}, cur.where()};
    cur.advance(); // opening quote
    while (true)
    {
        if (cur.done() || cur.peek() == '\n' || cur.peek() == '\r')
        {
            errors.push_back({cur.where(), "closing '\"'",
                              cur.done() ? "end of input" : "end of line"});
            return tok;
        }
        SourceLocation at = cur.where();
        char c = cur.advance();
        if (c == '"')
            return tok;
        if (c != '\\')
        {
            tok.text += c;
            continue;
        }
        if (cur.done())
            continue; // reported as unterminated on the next iteration
        char e = cur.advance();
        switch (e)
        {
        case '"': tok.text += '"'; break;
        case '\\': tok.text += '\\'; break;
        case 'n': tok.text += '\n'; break;
        case 'r': tok.text += '\r'; break;
        case 't': tok.text += '\t'; break;
        case 'u': {
            unsigned cp = 0;
            bool good = true;
            for (int i = 0; i < 4; ++i)
            {
                auto v = hex_value(cur.peek());
                if (!v)
                {
                    good = false;
                    break;
                }
                cp = cp * 16 + *v;
                cur.advance();
            }
            if (good)
                append_utf8(tok.text, cp);
            else
                errors.push_back({at, "four hex digits after '\\u'", "malformed escape"});
            break;
        }
        default:
            errors.push_back({at, "escape sequence (\\\" \\\\ \\n \\r \\t \\uXXXX)",
                              std::string("'\\") + e + "'"});
        }
    }
}

} // namespace

std::vector<Token> tokenize(std::string_view input, std::vector<ParseError>& errors)
{
    std::vector<Token> out;
    Cursor cur(input);
    while (!cur.done())
    {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        {
            cur.advance();
            continue;
        }
        if (c == '#')
        {
            while (!cur.done() && cur.peek() != '\n')
                cur.advance();
            continue;
        }
        SourceLocation at = cur.where();
        if (c == '"')
        {
            out.push_back(lex_string(cur, errors));
            continue;
        }
        if (is_word_start(c))
        {
            Token tok{TokenKind::Word, {}, at};
            while (!cur.done() && is_word_char(cur.peek()))
                tok.text += cur.advance();
            out.push_back(std::move(tok));
            continue;
        }
        auto single = [&](TokenKind k, std::string text, int len) {
            for (int i = 0; i < len; ++i)
                cur.advance();
            out.push_back({k, std::move(text), at});
        };
        if (c == '{')
            single(TokenKind::LBrace, "{", 1);
        else if (c == '}')
            single(TokenKind::RBrace, "}", 1);
        else if (c == ':')
            single(TokenKind::Colon, ":", 1);
        else if (c == '.')
            single(TokenKind::Dot, ".", 1);
        else if (c == '-' && cur.peek(1) == '>')
            single(TokenKind::Arrow, "->", 2);
        else if (c == '<' && cur.peek(1) == '-' && cur.peek(2) == '>')
            single(TokenKind::BiArrow, "<->", 3);
        else
        {
            std::string found(1, c);
            cur.advance();
            // keep multi-byte characters whole in the message
            while (!cur.done() && (static_cast<unsigned char>(cur.peek()) & 0xC0) == 0x80)
                found += cur.advance();
            errors.push_back({at, "keyword, string or punctuation", "'" + found + "'"});
        }
    }
    out.push_back({TokenKind::End, {}, cur.where()});
    return out;
}

} // namespace nfrs::text::detail
