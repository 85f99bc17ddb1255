#include "ontokit/parser.hpp"

namespace ontokit {

namespace {

bool isSpace(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool isNameChar(char c) noexcept {
    auto u = static_cast<unsigned char>(c);
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-' ||
           c == '.' || u >= 0x80;
}

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skipTrivia();
            SourceLocation start = loc_;
            if (atEnd()) {
                out.push_back({TokenKind::Eof, {}, start});
                return out;
            }
            char c = input_[pos_];
            switch (c) {
                case '(':
                    advance();
                    out.push_back({TokenKind::OpenParen, "(", start});
                    break;
                case ')':
                    advance();
                    out.push_back({TokenKind::CloseParen, ")", start});
                    break;
                case '=':
                    advance();
                    out.push_back({TokenKind::Equals, "=", start});
                    break;
                case '^':
                    advance();
                    if (atEnd() || input_[pos_] != '^') throw ParseError(ParseErrorKind::LexError, start, "expected '^^'");
                    advance();
                    out.push_back({TokenKind::CaretCaret, "^^", start});
                    break;
                case '"':
                    out.push_back({TokenKind::StringLiteral, readString(start), start});
                    break;
                case '<':
                    out.push_back({TokenKind::IriRef, readIri(start), start});
                    break;
                default:
                    if (isNameChar(c) || c == ':') {
                        out.push_back(readName(start));
                    } else {
                        throw ParseError(ParseErrorKind::LexError, start,
                                         "unexpected character '" + std::string(1, c) + "'");
                    }
            }
        }
    }

private:
    bool atEnd() const noexcept { return pos_ >= input_.size(); }

    void advance() {
        char c = input_[pos_++];
        if (c == '\n') {
            ++loc_.line;
            loc_.column = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++loc_.column;
        }
    }

    void skipTrivia() {
        while (!atEnd()) {
            char c = input_[pos_];
            if (isSpace(c)) {
                advance();
            } else if (c == '#') {
                while (!atEnd() && input_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string readString(SourceLocation start) {
        advance();  // opening quote
        std::string value;
        while (!atEnd()) {
            char c = input_[pos_];
            if (c == '"') {
                advance();
                return value;
            }
            if (c == '\\') {
                SourceLocation escLoc = loc_;
                advance();
                if (atEnd()) break;
                char e = input_[pos_];
                if (e != '"' && e != '\\')
                    throw ParseError(ParseErrorKind::LexError, escLoc,
                                     "invalid escape '\\" + std::string(1, e) + "' in string");
                value.push_back(e);
                advance();
                continue;
            }
            value.push_back(c);
            advance();
        }
        throw ParseError(ParseErrorKind::LexError, start, "unterminated string literal");
    }

    std::string readIri(SourceLocation start) {
        advance();  // '<'
        std::string value;
        while (!atEnd()) {
            char c = input_[pos_];
            if (c == '>') {
                advance();
                if (!Iri::isValid(value))
                    throw ParseError(ParseErrorKind::LexError, start, "malformed IRI <" + value + ">");
                return value;
            }
            if (isSpace(c) || c == '<' || c == '"') break;
            value.push_back(c);
            advance();
        }
        throw ParseError(ParseErrorKind::LexError, start, "malformed IRI <" + value);
    }

    Token readName(SourceLocation start) {
        std::string text;
        while (!atEnd() && isNameChar(input_[pos_])) {
            text.push_back(input_[pos_]);
            advance();
        }
        if (!atEnd() && input_[pos_] == ':') {
            text.push_back(':');
            advance();
            while (!atEnd() && isNameChar(input_[pos_])) {
                text.push_back(input_[pos_]);
                advance();
            }
            return {TokenKind::PrefixedName, std::move(text), start};
        }
        return {TokenKind::Keyword, std::move(text), start};
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    SourceLocation loc_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace ontokit
