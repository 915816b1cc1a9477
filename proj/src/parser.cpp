#include <functional>
#include <map>
#include <set>

#include "lexer.hpp"
#include "nfrs/text_format.hpp"

namespace nfrs::text {

std::string ParseError::message() const
{
    return "expected " + expected + ", found " + found;
}

ParseResult::ParseResult(store::Document doc)
    : m_value(std::move(doc))
{
}

ParseResult::ParseResult(std::vector<ParseError> errors)
    : m_value(std::move(errors))
{
}

const store::Document& ParseResult::document() const
{
    return std::get<store::Document>(m_value);
}

store::Document& ParseResult::document()
{
    return std::get<store::Document>(m_value);
}

const std::vector<ParseError>& ParseResult::errors() const
{
    static const std::vector<ParseError> none;
    if (auto* errs = std::get_if<std::vector<ParseError>>(&m_value))
        return *errs;
    return none;
}

namespace {

using detail::Token;
using detail::TokenKind;
using namespace store;

// Thrown to abandon the current block; the caller resynchronizes.
struct SyntaxError
{
};

bool valid_name(std::string_view name)
{
    if (name.empty())
        return false;
    if (name.front() == ' ' || name.back() == ' ')
        return false;
    for (char c : name)
    {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7F)
            return false;
    }
    return true;
}

const std::set<std::string_view> kTopLevel = {"category", "entity", "fr", "model", "view_model"};

class Parser
{
public:
    Parser(std::vector<Token> tokens, std::vector<ParseError> errors)
        : m_tokens(std::move(tokens))
        , m_errors(std::move(errors))
    {
    }

    ParseResult run()
    {
        while (peek().kind != TokenKind::End)
        {
            try
            {
                top_level();
            }
            catch (const SyntaxError&)
            {
                recover(0, [](const Token& t) {
                    return t.kind == TokenKind::Word && kTopLevel.contains(t.text);
                });
                // a stray '}' at depth 0 would stall recovery
                if (peek().kind == TokenKind::RBrace)
                    advance();
            }
        }
        if (!m_errors.empty())
            return ParseResult(std::move(m_errors));
        return ParseResult(std::move(m_doc));
    }

private:
    // -- token plumbing -----------------------------------------------------

    const Token& peek() const { return m_tokens[m_pos]; }

    const Token& advance()
    {
        const Token& t = m_tokens[m_pos];
        if (t.kind == TokenKind::LBrace)
            ++m_depth;
        else if (t.kind == TokenKind::RBrace && m_depth > 0)
            --m_depth;
        if (t.kind != TokenKind::End)
            ++m_pos;
        return t;
    }

    [[noreturn]] void fail(std::string expected)
    {
        m_errors.push_back({peek().location, std::move(expected), detail::describe(peek())});
        throw SyntaxError{};
    }

    void error_at(SourceLocation where, std::string expected, std::string found)
    {
        m_errors.push_back({where, std::move(expected), std::move(found)});
    }

    const Token& expect(TokenKind kind, const char* what)
    {
        if (peek().kind != kind)
            fail(what);
        return advance();
    }

    bool at_word(std::string_view w) const
    {
        return peek().kind == TokenKind::Word && peek().text == w;
    }

    void expect_word(std::string_view w)
    {
        if (!at_word(w))
            fail("'" + std::string(w) + "'");
        advance();
    }

    std::string text_value()
    {
        return expect(TokenKind::String, "string").text;
    }

    std::string name_value()
    {
        const Token& t = expect(TokenKind::String, "quoted name");
        if (!valid_name(t.text))
            error_at(t.location, "non-empty name without control characters or surrounding spaces",
                     quote(t.text));
        return t.text;
    }

    /// Skips to the next token at `base` depth that starts an item or closes the block.
    void recover(int base, const std::function<bool(const Token&)>& is_start)
    {
        while (peek().kind != TokenKind::End)
        {
            if (m_depth == base && (peek().kind == TokenKind::RBrace || is_start(peek())))
                return;
            if (m_depth < base)
                return;
            advance();
        }
    }

    // Field blocks: `{ name: value ... }`, each field at most once.
    using FieldHandler = std::function<void()>;

    void field_block(const std::map<std::string, FieldHandler, std::less<>>& fields,
                     std::set<std::string>& seen)
    {
        expect(TokenKind::LBrace, "'{'");
        while (peek().kind != TokenKind::RBrace)
        {
            if (peek().kind != TokenKind::Word || !fields.contains(peek().text))
            {
                std::string names;
                for (const auto& [n, _] : fields)
                    names += (names.empty() ? "" : ", ") + n;
                fail("field (" + names + ") or '}'");
            }
            const Token& key = advance();
            if (!seen.insert(key.text).second)
                error_at(key.location, "at most one '" + key.text + "' field",
                         "duplicate '" + key.text + "'");
            expect(TokenKind::Colon, "':'");
            fields.find(key.text)->second();
        }
    }

    void require(const std::set<std::string>& seen, const Token& closing,
                 std::initializer_list<const char*> required)
    {
        for (const char* f : required)
        {
            if (!seen.contains(f))
                error_at(closing.location, "field '" + std::string(f) + "'",
                         detail::describe(closing));
        }
    }

    template <typename Map>
    bool claim(Map& map, const std::string& name, const char* what, SourceLocation where)
    {
        if (map.contains(name))
        {
            error_at(where, std::string("unique ") + what + " name", "duplicate " + quote(name));
            return false;
        }
        return true;
    }

    // -- grammar --------------------------------------------------------------

    void top_level()
    {
        if (peek().kind != TokenKind::Word || !kTopLevel.contains(peek().text))
            fail("'category', 'entity', 'fr', 'model' or 'view_model'");
        const Token& kw = advance();
        if (kw.text == "category")
            category(kw.location);
        else if (kw.text == "entity")
            entity(kw.location);
        else if (kw.text == "fr")
            functional_requirement(kw.location);
        else if (kw.text == "model")
            model(kw.location);
        else
            view_model(kw.location);
    }

    void category(SourceLocation at)
    {
        CategoryNode node;
        node.name = name_value();
        std::set<std::string> seen;
        field_block({{"description", [&] { node.description = text_value(); }},
                     {"parent", [&] { node.parent = name_value(); }}},
                    seen);
        advance();
        if (claim(m_doc.categories, node.name, "category", at))
        {
            m_doc.source_locations[path::category(node.name)] = at;
            m_doc.categories.emplace(node.name, std::move(node));
        }
    }

    void entity(SourceLocation at)
    {
        EntityNode node;
        node.name = name_value();
        std::set<std::string> seen;
        field_block({{"description", [&] { node.description = text_value(); }},
                     {"belongs_to", [&] { node.category = name_value(); }}},
                    seen);
        advance();
        if (claim(m_doc.entities, node.name, "entity", at))
        {
            m_doc.source_locations[path::entity(node.name)] = at;
            m_doc.entities.emplace(node.name, std::move(node));
        }
    }

    void functional_requirement(SourceLocation at)
    {
        FunctionalRequirementNode node;
        node.name = name_value();
        std::set<std::string> seen;
        field_block({{"statement", [&] { node.statement = text_value(); }},
                     {"requester", [&] { node.requester = text_value(); }}},
                    seen);
        const Token& closing = advance();
        auto before = m_errors.size();
        require(seen, closing, {"statement", "requester"});
        if (m_errors.size() == before && claim(m_doc.functional_requirements, node.name, "fr", at))
        {
            m_doc.source_locations[path::fr(node.name)] = at;
            m_doc.functional_requirements.emplace(node.name, std::move(node));
        }
    }

    void model(SourceLocation at)
    {
        NfrsModelNode node;
        node.name = name_value();
        std::map<std::string, SourceLocation> locations;
        expect(TokenKind::LBrace, "'{'");
        const int base = m_depth;
        bool have_spec = false;
        while (peek().kind != TokenKind::RBrace && peek().kind != TokenKind::End)
        {
            try
            {
                model_item(node, locations, have_spec);
            }
            catch (const SyntaxError&)
            {
                recover(base, [](const Token& t) {
                    return t.kind == TokenKind::Word &&
                           (parse_nfr_kind(t.text) || parse_model_edge_kind(t.text) ||
                            t.text == "specification");
                });
                if (m_depth < base)
                    return; // block already closed during recovery
            }
        }
        expect(TokenKind::RBrace, "'}'");
        if (claim(m_doc.models, node.name, "model", at))
        {
            m_doc.source_locations[path::model(node.name)] = at;
            for (auto& [p, loc] : locations)
                m_doc.source_locations[p] = loc;
            m_doc.models.emplace(node.name, std::move(node));
        }
    }

    void model_item(NfrsModelNode& node, std::map<std::string, SourceLocation>& locations,
                    bool& have_spec)
    {
        if (at_word("specification"))
        {
            const Token& key = advance();
            if (have_spec)
                error_at(key.location, "at most one 'specification' field",
                         "duplicate 'specification'");
            have_spec = true;
            expect(TokenKind::Colon, "':'");
            node.specification = text_value();
            return;
        }
        if (peek().kind == TokenKind::Word)
        {
            if (auto kind = parse_nfr_kind(peek().text))
            {
                const Token& kw = advance();
                nfr(*kind, kw.location, node, locations);
                return;
            }
            if (auto kind = parse_model_edge_kind(peek().text))
            {
                const Token& kw = advance();
                model_edge(*kind, kw.location, node, locations);
                return;
            }
        }
        fail("'characteristic', 'attribute', 'statement_item', an edge keyword, "
             "'specification' or '}'");
    }

    void nfr(NfrKind kind, SourceLocation at, NfrsModelNode& model,
             std::map<std::string, SourceLocation>& locations)
    {
        NfrNode node;
        node.kind = kind;
        node.name = name_value();
        std::set<std::string> seen;
        std::map<std::string, FieldHandler, std::less<>> fields = {
            {"statement", [&] { node.statement = text_value(); }}};
        if (kind == NfrKind::StatementItem)
            fields["declaration"] = [&] { node.declaration = text_value(); };
        else
            fields["definition"] = [&] { node.definition = text_value(); };
        if (kind == NfrKind::Characteristic)
        {
            fields["focus"] = [&] {
                if (peek().kind != TokenKind::Word || !parse_focus_kind(peek().text))
                    fail("'quality' or 'cost'");
                node.focus = parse_focus_kind(advance().text);
            };
        }

        field_block(fields, seen);
        const Token& closing = advance();
        auto before = m_errors.size();
        require(seen, closing, {kind == NfrKind::StatementItem ? "declaration" : "definition"});
        if (m_errors.size() == before && claim(model.nfrs, node.name, "nfr", at))
        {
            locations[path::nfr(model.name, node.name)] = at;
            model.nfrs.emplace(node.name, std::move(node));
        }
    }

    void model_edge(ModelEdgeKind kind, SourceLocation at, NfrsModelNode& model,
                    std::map<std::string, SourceLocation>& locations)
    {
        ModelEdge edge;
        edge.kind = kind;
        std::string first = name_value();
        if (kind == ModelEdgeKind::SubCharacteristic)
            expect_word("of");
        else if (kind == ModelEdgeKind::RelatesWith)
            expect(TokenKind::BiArrow, "'<->'");
        else
            expect(TokenKind::Arrow, "'->'");
        std::string second = name_value();
        if (kind == ModelEdgeKind::SubCharacteristic)
        {
            edge.source = std::move(second);
            edge.target = std::move(first);
        }
        else
        {
            edge.source = std::move(first);
            edge.target = std::move(second);
        }
        locations.emplace(path::model_edge(model.name, edge), at);
        model.edges.insert(std::move(edge));
    }

    void view_model(SourceLocation at)
    {
        NfrsViewModelNode node;
        node.name = name_value();
        std::map<std::string, SourceLocation> locations;
        expect(TokenKind::LBrace, "'{'");
        const int base = m_depth;
        bool have_spec = false;
        while (peek().kind != TokenKind::RBrace && peek().kind != TokenKind::End)
        {
            try
            {
                view_model_item(node, locations, have_spec);
            }
            catch (const SyntaxError&)
            {
                recover(base, [](const Token& t) {
                    return t.kind == TokenKind::Word &&
                           (t.text == "view" || t.text == "influences" ||
                            t.text == "depends_on" || t.text == "specification");
                });
                if (m_depth < base)
                    return;
            }
        }
        expect(TokenKind::RBrace, "'}'");
        if (claim(m_doc.view_models, node.name, "view_model", at))
        {
            m_doc.source_locations[path::view_model(node.name)] = at;
            for (auto& [p, loc] : locations)
                m_doc.source_locations[p] = loc;
            m_doc.view_models.emplace(node.name, std::move(node));
        }
    }

    void view_model_item(NfrsViewModelNode& vm, std::map<std::string, SourceLocation>& locations,
                         bool& have_spec)
    {
        if (at_word("specification"))
        {
            const Token& key = advance();
            if (have_spec)
                error_at(key.location, "at most one 'specification' field",
                         "duplicate 'specification'");
            have_spec = true;
            expect(TokenKind::Colon, "':'");
            vm.specification = text_value();
            return;
        }
        if (at_word("view"))
        {
            SourceLocation at = advance().location;
            view(at, vm, locations);
            return;
        }
        if (at_word("influences") || at_word("depends_on"))
        {
            const Token& kw = advance();
            bool depends = kw.text == "depends_on";
            ViewEdge edge;
            edge.source = name_value();
            expect(TokenKind::Arrow, "'->'");
            edge.target = name_value();
            locations.emplace(depends ? path::depends_on(vm.name, edge)
                                      : path::influences(vm.name, edge),
                              kw.location);
            (depends ? vm.depends_on : vm.influences).insert(std::move(edge));
            return;
        }
        fail("'view', 'influences', 'depends_on', 'specification' or '}'");
    }

    void view(SourceLocation at, NfrsViewModelNode& vm,
              std::map<std::string, SourceLocation>& locations)
    {
        NfrViewNode node;
        node.name = name_value();
        std::set<std::string> seen;
        field_block(
            {{"kind",
              [&] {
                  if (peek().kind != TokenKind::Word || !parse_focus_kind(peek().text))
                      fail("'quality' or 'cost'");
                  node.kind = *parse_focus_kind(advance().text);
              }},
             {"category", [&] { node.category = name_value(); }},
             {"focus",
              [&] {
                  FocusRef ref;
                  ref.model = name_value();
                  expect(TokenKind::Dot, "'.'");
                  ref.characteristic = name_value();
                  node.focus = std::move(ref);
              }},
             {"statement", [&] { node.statement = text_value(); }}},
            seen);
        const Token& closing = advance();
        auto before = m_errors.size();
        require(seen, closing, {"kind"});
        if (m_errors.size() == before && claim(vm.views, node.name, "view", at))
        {
            locations[path::view(vm.name, node.name)] = at;
            vm.views.emplace(node.name, std::move(node));
        }
    }

    std::vector<Token> m_tokens;
    std::vector<ParseError> m_errors;
    std::size_t m_pos = 0;
    int m_depth = 0;
    Document m_doc;
};

} // namespace

ParseResult parse(std::string_view input)
{
    std::vector<ParseError> errors;
    auto tokens = detail::tokenize(input, errors);
    return Parser(std::move(tokens), std::move(errors)).run();
}

} // namespace nfrs::text
