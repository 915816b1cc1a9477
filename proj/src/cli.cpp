#include "nfrs/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nfrs/architecture.hpp"
#include "nfrs/export.hpp"
#include "nfrs/ontology.hpp"
#include "nfrs/query.hpp"
#include "nfrs/text_format.hpp"
#include "nfrs/validator.hpp"

namespace nfrs::cli {

namespace {

using nlohmann::json;

struct Options
{
    std::string format = "text";
    bool strict = false;

    std::string file;
    std::string mode = "model";
    std::string export_to = "json";
    std::string out_path;

    std::string version = "1.2";
    std::string old_version;
    std::string new_version;
    std::string term;

    std::string view_model;
    std::string from;
    bool transitive = false;
    std::string model;
    std::string characteristic;
    std::string fr_name;
};

/// Thrown inside command handlers to leave with a specific exit code.
struct Exit
{
    ExitCode code;
};

class Runner
{
public:
    Runner(const Options& opts, std::ostream& out, std::ostream& err, const Environment& env)
        : m_opts(opts)
        , m_out(out)
        , m_err(err)
        , m_env(env)
    {
    }

    bool json_output() const { return m_opts.format == "json"; }

    std::string read_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            m_err << "nfrsctl: cannot read '" << path << "'\n";
            throw Exit{ExitCode::UsageError};
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    store::Document load_document()
    {
        auto result = text::parse(read_file(m_opts.file));
        if (result)
            return std::move(result.document());
        if (json_output())
        {
            auto arr = json::array();
            for (const auto& e : result.errors())
                arr.push_back({{"file", m_opts.file},
                               {"line", e.location.line},
                               {"column", e.location.column},
                               {"expected", e.expected},
                               {"found", e.found},
                               {"message", e.message()}});
            m_out << arr.dump() << "\n";
        }
        else
        {
            for (const auto& e : result.errors())
                m_err << m_opts.file << ":" << e.location.line << ":" << e.location.column << ": "
                      << severity_word(Severity::Error) << " parse: " << e.message() << "\n";
        }
        throw Exit{ExitCode::ParseFailure};
    }

    std::string severity_word(Severity s) const
    {
        if (!m_env.color)
            return to_string(s);
        const char* ansi = s == Severity::Error ? "\x1b[31m" : "\x1b[33m";
        return std::string(ansi) + to_string(s) + "\x1b[0m";
    }

    void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& os)
    {
        if (json_output())
        {
            os << render_json(diags, m_opts.file);
            return;
        }
        for (const auto& d : diags)
        {
            auto line = render_text(d, m_opts.file);
            if (m_env.color)
            {
                const std::string plain = std::string(": ") + to_string(d.severity) + " ";
                if (auto at = line.find(plain); at != std::string::npos)
                    line.replace(at, plain.size(), ": " + severity_word(d.severity) + " ");
            }
            os << line << "\n";
        }
    }

    ExitCode exit_for(const std::vector<Diagnostic>& diags) const
    {
        if (has_errors(diags) || (m_opts.strict && !diags.empty()))
            return ExitCode::ValidationErrors;
        return ExitCode::Success;
    }

    // -- validate -------------------------------------------------------------

    ExitCode validate()
    {
        validation::ValidationMode mode;
        if (m_opts.mode == "model")
            mode = validation::ValidationMode::Model;
        else if (m_opts.mode == "instance")
            mode = validation::ValidationMode::Instance;
        else
            return usage("unknown mode '" + m_opts.mode + "' (model, instance)");

        auto doc = load_document();
        auto diags = validation::validate(doc, mode);
        print_diagnostics(diags, m_out);
        return exit_for(diags);
    }

    // -- export ---------------------------------------------------------------

    ExitCode export_document()
    {
        auto format = exporting::parse_export_format(m_opts.export_to);
        if (!format)
            return usage("unknown export format '" + m_opts.export_to + "' (json, dot, turtle)");
        auto doc = load_document();

        std::vector<Diagnostic> blocking;
        for (auto& d : validation::validate(doc, validation::ValidationMode::Model))
        {
            if (d.code == "R-REF")
                blocking.push_back(std::move(d));
        }
        if (!blocking.empty())
        {
            print_diagnostics(blocking, m_err);
            return ExitCode::ValidationErrors;
        }

        auto text = exporting::export_document(doc, *format);
        if (m_opts.out_path.empty())
        {
            m_out << text;
            return ExitCode::Success;
        }
        std::ofstream file(m_opts.out_path, std::ios::binary);
        if (!file || !(file << text))
            return usage("cannot write '" + m_opts.out_path + "'");
        return ExitCode::Success;
    }

    // -- schema ---------------------------------------------------------------

    const kernel::OntologySchema& schema_version(const std::string& version)
    {
        try
        {
            return kernel::builtin_schema(version);
        }
        catch (const kernel::UnknownVersion& e)
        {
            usage(e.what());
            throw Exit{ExitCode::UsageError};
        }
    }

    ExitCode schema_counts()
    {
        auto c = kernel::schema_counts(schema_version(m_opts.version));
        if (json_output())
            m_out << exporting::canonical_json(
                {{"terms", c.terms}, {"properties", c.properties}, {"relationships", c.relationships}});
        else
            m_out << "terms=" << c.terms << " properties=" << c.properties
                  << " relationships=" << c.relationships << "\n";
        return ExitCode::Success;
    }

    ExitCode schema_dump()
    {
        m_out << exporting::canonical_json(exporting::to_json(schema_version(m_opts.version)));
        return ExitCode::Success;
    }

    ExitCode schema_diff()
    {
        const auto& older = schema_version(m_opts.old_version);
        const auto& newer = schema_version(m_opts.new_version);
        auto diff = kernel::diff_schemas(older, newer);
        if (json_output())
        {
            m_out << exporting::canonical_json(exporting::to_json(diff));
            return ExitCode::Success;
        }
        for (const auto& t : diff.added_terms)
            m_out << "added term: " << t << "\n";
        for (const auto& t : diff.removed_terms)
            m_out << "removed term: " << t << "\n";
        for (const auto& r : diff.added_relationships)
            m_out << "added relationship: " << kernel::describe(r) << "\n";
        for (const auto& r : diff.removed_relationships)
            m_out << "removed relationship: " << kernel::describe(r) << "\n";
        for (const auto& r : diff.renamed_relationships)
            m_out << "renamed relationship: " << r.old_name << " -> " << r.new_name << " ("
                  << r.source_term << " -> " << r.target_term << ")\n";
        for (const auto& s : diff.stereotype_changes)
            m_out << (s.added ? "added" : "removed") << " stereotype: " << s.term << " <<"
                  << kernel::to_string(s.stereotype) << ">>\n";
        return ExitCode::Success;
    }

    ExitCode schema_stereotypes()
    {
        const auto& schema = schema_version(m_opts.version);
        std::vector<kernel::Stereotype> chain;
        try
        {
            chain = kernel::stereotype_chain(schema, m_opts.term);
        }
        catch (const kernel::UnknownTerm& e)
        {
            return usage(e.what());
        }
        if (json_output())
        {
            auto arr = json::array();
            for (const auto& s : chain)
                arr.push_back({{"component", s.component.name},
                               {"level", kernel::to_string(s.component.level)},
                               {"term", s.term},
                               {"reused_from", s.reused_from}});
            m_out << exporting::canonical_json(arr);
        }
        else
        {
            for (const auto& s : chain)
                m_out << kernel::to_string(s) << "\n";
        }
        return ExitCode::Success;
    }

    // -- query ----------------------------------------------------------------

    store::Document load_valid_document()
    {
        auto doc = load_document();
        auto diags = validation::validate(doc, validation::ValidationMode::Model);
        if (has_errors(diags))
        {
            std::vector<Diagnostic> errors;
            for (auto& d : diags)
            {
                if (d.severity == Severity::Error)
                    errors.push_back(std::move(d));
            }
            print_diagnostics(errors, m_err);
            throw Exit{ExitCode::ValidationErrors};
        }
        return doc;
    }

    void print_names(const std::vector<std::string>& names)
    {
        if (json_output())
        {
            m_out << exporting::canonical_json(names);
            return;
        }
        for (const auto& n : names)
            m_out << n << "\n";
    }

    template <typename F>
    ExitCode guarded(F&& body)
    {
        try
        {
            body();
            return ExitCode::Success;
        }
        catch (const Exit&)
        {
            throw;
        }
        catch (const Error& e)
        {
            return usage(e.what());
        }
    }

    ExitCode query_closure(bool depends)
    {
        auto doc = load_valid_document();
        return guarded([&] {
            std::vector<std::string> names;
            if (m_opts.transitive)
                names = (depends ? query::depends_closure : query::influence_closure)(
                            doc, m_opts.view_model, m_opts.from)
                            .reached;
            else
                names = (depends ? query::direct_dependencies : query::direct_influences)(
                    doc, m_opts.view_model, m_opts.from);
            print_names(names);
        });
    }

    ExitCode query_leaf_attributes()
    {
        auto doc = load_valid_document();
        return guarded([&] {
            print_names(query::leaf_attributes(doc, m_opts.model, m_opts.characteristic));
        });
    }

    static std::string format_ratio(double value)
    {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
        std::string s(buf, ec == std::errc{} ? end : buf);
        if (s.find('.') == std::string::npos)
            s += ".0";
        return s;
    }

    ExitCode query_coverage()
    {
        auto doc = load_valid_document();
        return guarded([&] {
            auto report = query::mapping_coverage(doc, m_opts.model);
            const auto total = report.mapped.size() + report.unmapped.size();
            if (json_output())
            {
                json j;
                j["mapped"] = json::array();
                for (const auto& [item, attrs] : report.mapped)
                    j["mapped"].push_back({{"item", item}, {"attributes", attrs}});
                j["unmapped"] = report.unmapped;
                j["ratio"] = report.ratio.value();
                j["mapped_count"] = report.mapped.size();
                j["total"] = total;
                m_out << exporting::canonical_json(j);
                return;
            }
            for (const auto& [item, attrs] : report.mapped)
            {
                m_out << "mapped: " << item << " ->";
                for (std::size_t i = 0; i < attrs.size(); ++i)
                    m_out << (i ? ", " : " ") << attrs[i];
                m_out << "\n";
            }
            for (const auto& item : report.unmapped)
                m_out << "unmapped: " << item << "\n";
            m_out << "ratio: " << format_ratio(report.ratio.value()) << " (" << report.mapped.size()
                  << " of " << total << " statement items mapped)\n";
        });
    }

    ExitCode query_trace_fr()
    {
        auto doc = load_valid_document();
        return guarded([&] {
            auto pairs = query::trace_satisfies(doc, m_opts.fr_name);
            if (json_output())
            {
                auto arr = json::array();
                for (const auto& [model, nfr] : pairs)
                    arr.push_back({{"model", model}, {"nfr", nfr}});
                m_out << exporting::canonical_json(arr);
                return;
            }
            for (const auto& [model, nfr] : pairs)
                m_out << model << "\t" << nfr << "\n";
        });
    }

    // -- lint-arch ------------------------------------------------------------

    ExitCode lint_arch()
    {
        auto text = read_file(m_opts.file);
        kernel::ArchSpec spec;
        try
        {
            spec = kernel::parse_arch_spec(text);
        }
        catch (const kernel::ArchParseError& e)
        {
            m_err << m_opts.file << ":" << e.location.line << ":" << e.location.column << ": "
                  << severity_word(Severity::Error) << " parse: " << e.what() << "\n";
            return ExitCode::ParseFailure;
        }
        auto diags = kernel::lint_architecture(spec);
        print_diagnostics(diags, m_out);
        return exit_for(diags);
    }

    ExitCode usage(const std::string& message)
    {
        m_err << "nfrsctl: " << message << "\n";
        return ExitCode::UsageError;
    }

private:
    const Options& m_opts;
    std::ostream& m_out;
    std::ostream& m_err;
    Environment m_env;
};

} // namespace

ExitCode run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const Environment& env)
{
    Options opts;
    CLI::App app{"Author, validate, query and export NFRsTDO models", "nfrsctl"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opts.format, "Output rendering")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", opts.strict, "Warnings also yield exit code 1");

    ExitCode result = ExitCode::Success;
    std::function<ExitCode(Runner&)> action;

    auto* validate = app.add_subcommand("validate", "Parse and validate a .nfrs file");
    validate->fallthrough();
    validate->add_option("file", opts.file, "Input .nfrs file")->required();
    validate->add_option("--mode", opts.mode, "model or instance");
    validate->callback([&] { action = [](Runner& r) { return r.validate(); }; });

    auto* exp = app.add_subcommand("export", "Export a document as json, dot or turtle");
    exp->fallthrough();
    exp->add_option("file", opts.file, "Input .nfrs file")->required();
    exp->add_option("--to", opts.export_to, "json, dot or turtle");
    exp->add_option("-o,--out", opts.out_path, "Write to a file instead of stdout");
    exp->callback([&] { action = [](Runner& r) { return r.export_document(); }; });

    auto* schema = app.add_subcommand("schema", "Inspect the built-in ontology schema");
    schema->fallthrough();
    schema->require_subcommand(1);
    auto* counts = schema->add_subcommand("counts", "Count terms, properties and relationships");
    counts->fallthrough();
    counts->add_option("--version", opts.version, "Schema version (1.1 or 1.2)");
    counts->callback([&] { action = [](Runner& r) { return r.schema_counts(); }; });
    auto* dump = schema->add_subcommand("dump", "Print the schema as canonical JSON");
    dump->fallthrough();
    dump->add_option("--version", opts.version, "Schema version (1.1 or 1.2)");
    dump->callback([&] { action = [](Runner& r) { return r.schema_dump(); }; });
    auto* diff = schema->add_subcommand("diff", "Show changes between two schema versions");
    diff->fallthrough();
    diff->add_option("old", opts.old_version, "Older version")->required();
    diff->add_option("new", opts.new_version, "Newer version")->required();
    diff->callback([&] { action = [](Runner& r) { return r.schema_diff(); }; });
    auto* stereo = schema->add_subcommand("stereotypes", "Print a term's stereotype chain");
    stereo->fallthrough();
    stereo->add_option("term", opts.term, "Term name")->required();
    stereo->add_option("--version", opts.version, "Schema version (1.1 or 1.2)");
    stereo->callback([&] { action = [](Runner& r) { return r.schema_stereotypes(); }; });

    auto* query = app.add_subcommand("query", "Run an analysis over a valid document");
    query->fallthrough();
    query->require_subcommand(1);
    auto closure_cmd = [&](const char* name, const char* help, bool depends) {
        auto* cmd = query->add_subcommand(name, help);
        cmd->fallthrough();
        cmd->add_option("file", opts.file, "Input .nfrs file")->required();
        cmd->add_option("--view-model", opts.view_model, "View model name")->required();
        cmd->add_option("--from", opts.from, "Origin quality view")->required();
        cmd->add_flag("--transitive", opts.transitive, "Full closure instead of direct edges");
        cmd->callback([&, depends] {
            action = [depends](Runner& r) { return r.query_closure(depends); };
        });
    };
    closure_cmd("influences", "Views influenced by a quality view", false);
    closure_cmd("depends", "Views a quality view depends on", true);
    auto* leaf = query->add_subcommand("leaf-attributes", "Attributes beneath a characteristic");
    leaf->fallthrough();
    leaf->add_option("file", opts.file, "Input .nfrs file")->required();
    leaf->add_option("--model", opts.model, "Model name")->required();
    leaf->add_option("--characteristic", opts.characteristic, "Characteristic name")->required();
    leaf->callback([&] { action = [](Runner& r) { return r.query_leaf_attributes(); }; });
    auto* coverage = query->add_subcommand("coverage", "Statement item to attribute mapping coverage");
    coverage->fallthrough();
    coverage->add_option("file", opts.file, "Input .nfrs file")->required();
    coverage->add_option("--model", opts.model, "Model name")->required();
    coverage->callback([&] { action = [](Runner& r) { return r.query_coverage(); }; });
    auto* trace = query->add_subcommand("trace-fr", "NFRs satisfying a functional requirement");
    trace->fallthrough();
    trace->add_option("file", opts.file, "Input .nfrs file")->required();
    trace->add_option("--name", opts.fr_name, "Functional requirement name")->required();
    trace->callback([&] { action = [](Runner& r) { return r.query_trace_fr(); }; });

    auto* lint = app.add_subcommand("lint-arch", "Check an ontology architecture file");
    lint->fallthrough();
    lint->add_option("file", opts.file, "Architecture file")->required();
    lint->callback([&] { action = [](Runner& r) { return r.lint_arch(); }; });

    std::vector<std::string> storage{"nfrsctl"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return ExitCode::Success;
    }
    catch (const CLI::ParseError& e)
    {
        err << "nfrsctl: " << e.what() << "\n";
        return ExitCode::UsageError;
    }

    if (!action)
        return ExitCode::UsageError;
    Runner runner(opts, out, err, env);
    try
    {
        result = action(runner);
    }
    catch (const Exit& e)
    {
        result = e.code;
    }
    return result;
}

} // namespace nfrs::cli
