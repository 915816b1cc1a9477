#include <algorithm>
#include <cstdio>
#include <vector>

#include "nfrs/text_format.hpp"

namespace nfrs::text {

using namespace store;

std::string quote(std::string_view raw)
{
    std::string out = "\"";
    for (char c : raw)
    {
        switch (c)
        {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F)
            {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned char>(c));
                out += buf;
            }
            else
            {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

namespace {

class Writer
{
public:
    void line(int indent, const std::string& text)
    {
        m_out.append(static_cast<std::size_t>(indent) * 2, ' ');
        m_out += text;
        m_out += '\n';
    }

    void field(int indent, const char* key, const std::optional<std::string>& value)
    {
        if (value)
            line(indent, std::string(key) + ": " + quote(*value));
    }

    void block_separator()
    {
        if (!m_out.empty())
            m_out += '\n';
    }

    std::string take() { return std::move(m_out); }

private:
    std::string m_out;
};

std::string edge_line(const ModelEdge& e)
{
    const char* kw = keyword(e.kind);
    switch (e.kind)
    {
    case ModelEdgeKind::SubCharacteristic:
        return std::string(kw) + " " + quote(e.target) + " of " + quote(e.source);
    case ModelEdgeKind::RelatesWith:
        return std::string(kw) + " " + quote(e.source) + " <-> " + quote(e.target);
    default:
        return std::string(kw) + " " + quote(e.source) + " -> " + quote(e.target);
    }
}

template <typename Range, typename F>
std::vector<std::string> sorted_lines(const Range& edges, F render)
{
    std::vector<std::string> lines;
    for (const auto& e : edges)
        lines.push_back(render(e));
    std::sort(lines.begin(), lines.end());
    return lines;
}

} // namespace

std::string serialize(const Document& doc)
{
    Writer w;

    for (const auto& [name, c] : doc.categories)
    {
        w.block_separator();
        w.line(0, "category " + quote(name) + " {");
        w.field(1, "description", c.description);
        w.field(1, "parent", c.parent);
        w.line(0, "}");
    }

    for (const auto& [name, e] : doc.entities)
    {
        w.block_separator();
        w.line(0, "entity " + quote(name) + " {");
        w.field(1, "description", e.description);
        w.field(1, "belongs_to", e.category);
        w.line(0, "}");
    }

    for (const auto& [name, fr] : doc.functional_requirements)
    {
        w.block_separator();
        w.line(0, "fr " + quote(name) + " {");
        w.field(1, "statement", fr.statement);
        w.field(1, "requester", fr.requester);
        w.line(0, "}");
    }

    for (const auto& [name, m] : doc.models)
    {
        w.block_separator();
        w.line(0, "model " + quote(name) + " {");
        w.field(1, "specification", m.specification);
        for (const auto& [nfr_name, n] : m.nfrs)
        {
            w.line(1, std::string(keyword(n.kind)) + " " + quote(nfr_name) + " {");
            w.field(2, "definition", n.definition);
            w.field(2, "declaration", n.declaration);
            w.field(2, "statement", n.statement);
            if (n.focus)
                w.line(2, std::string("focus: ") + keyword(*n.focus));
            w.line(1, "}");
        }
        for (const auto& l : sorted_lines(m.edges, edge_line))
            w.line(1, l);
        w.line(0, "}");
    }

    for (const auto& [name, vm] : doc.view_models)
    {
        w.block_separator();
        w.line(0, "view_model " + quote(name) + " {");
        w.field(1, "specification", vm.specification);
        for (const auto& [view_name, v] : vm.views)
        {
            w.line(1, "view " + quote(view_name) + " {");
            w.line(2, std::string("kind: ") + keyword(v.kind));
            w.field(2, "category", v.category);
            if (v.focus)
                w.line(2, "focus: " + quote(v.focus->model) + "." + quote(v.focus->characteristic));
            w.field(2, "statement", v.statement);
            w.line(1, "}");
        }
        auto arrow = [](const char* kw) {
            return [kw](const ViewEdge& e) {
                return std::string(kw) + " " + quote(e.source) + " -> " + quote(e.target);
            };
        };
        for (const auto& l : sorted_lines(vm.influences, arrow("influences")))
            w.line(1, l);
        for (const auto& l : sorted_lines(vm.depends_on, arrow("depends_on")))
            w.line(1, l);
        w.line(0, "}");
    }

    return w.take();
}

} // namespace nfrs::text
