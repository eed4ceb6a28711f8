#include "eigenseq/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigenseq/catalog.hpp"
#include "eigenseq/eigen.hpp"
#include "eigenseq/identities.hpp"

namespace eigenseq::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

struct PendingOp {
    char kind;
    std::optional<Rational> h, y, x;
};

OperatorSpec finish(const PendingOp &p) {
    switch (p.kind) {
    case 'L':
        if (!p.y) {
            throw std::invalid_argument("operator L needs y=<rational>");
        }
        return GenBinomial{p.h.value_or(Rational(1)), *p.y};
    case 'I':
        if (!p.x) {
            throw std::invalid_argument("operator I needs x=<rational>");
        }
        return Invert{*p.x};
    default:
        return Revert{};
    }
}

Rational parse_rational_arg(const std::string &text, const char *what) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument(std::string(what) + ": malformed rational \"" + text + "\"");
    }
}

Rational parse_term(const json &t) {
    if (t.is_string()) {
        return Rational::parse(t.get<std::string>());
    }
    if (t.is_number_integer()) {
        return Rational::parse(t.dump());
    }
    throw std::invalid_argument("terms must be rational strings, got " + t.dump());
}

std::string read_all(std::istream &is) { return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string &path, std::istream &in) {
    if (path == "-") {
        return read_all(in);
    }
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open file \"" + path + "\"");
    }
    return read_all(f);
}

struct InputOptions {
    std::string catalog_name;
    std::string file;
    std::size_t terms = 32;
    CLI::Option *terms_opt = nullptr;

    void attach(CLI::App *sub) {
        auto *in_opt = sub->add_option("--in", catalog_name, "catalog sequence name");
        auto *file_opt = sub->add_option("--file", file, "SequenceDocument JSON path, or - for stdin");
        in_opt->excludes(file_opt);
        terms_opt = sub->add_option("--terms", terms, "number of terms")->check(CLI::PositiveNumber);
    }

    SequenceDocument load(std::istream &in) const {
        if (!catalog_name.empty()) {
            return SequenceDocument{get_sequence(catalog_name, terms), 0};
        }
        if (file.empty()) {
            throw std::invalid_argument("an input is required: --in <catalog-name> or --file <path>");
        }
        auto doc = parse_sequence_document(read_source(file, in));
        if (terms_opt->count() > 0) {
            if (doc.sequence.size() < terms) {
                throw std::invalid_argument("input has " + std::to_string(doc.sequence.size()) +
                                            " terms, fewer than --terms " + std::to_string(terms));
            }
            doc.sequence.terms.resize(terms);
        }
        return doc;
    }
};

} // namespace

OperatorChain parse_chain(std::string_view text) {
    std::vector<OperatorSpec> ops;
    std::optional<PendingOp> cur;
    for (const auto &raw : split(text, ',')) {
        std::string tok = raw;
        if (tok.empty()) {
            throw std::invalid_argument("empty token in operator chain \"" + std::string(text) + "\"");
        }
        if (tok == "identity") {
            if (cur) {
                ops.push_back(finish(*cur));
            }
            cur.reset();
            ops.push_back(GenBinomial{Rational(1), Rational(0)});
            continue;
        }
        if (tok == "R" || tok == "R:" || ((tok[0] == 'L' || tok[0] == 'I') && tok.size() >= 2 && tok[1] == ':')) {
            if (cur) {
                ops.push_back(finish(*cur));
            }
            cur = PendingOp{tok[0], std::nullopt, std::nullopt, std::nullopt};
            tok = tok.size() > 2 ? tok.substr(2) : std::string{};
            if (tok.empty()) {
                continue;
            }
        }
        if (!cur) {
            throw std::invalid_argument("operator chain must start with L:, I: or R (got \"" + tok + "\")");
        }
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected key=value in operator chain, got \"" + tok + "\"");
        }
        const auto key = trim(tok.substr(0, eq));
        const auto value = parse_rational_arg(trim(tok.substr(eq + 1)), "operator parameter");
        std::optional<Rational> *slot = nullptr;
        if (cur->kind == 'L' && key == "h") {
            slot = &cur->h;
        } else if (cur->kind == 'L' && key == "y") {
            slot = &cur->y;
        } else if (cur->kind == 'I' && key == "x") {
            slot = &cur->x;
        }
        if (slot == nullptr) {
            throw std::invalid_argument("unknown parameter \"" + key + "\" for operator " + std::string(1, cur->kind));
        }
        if (slot->has_value()) {
            throw std::invalid_argument("parameter \"" + key + "\" given twice");
        }
        *slot = value;
    }
    if (cur) {
        ops.push_back(finish(*cur));
    }
    if (ops.empty()) {
        throw std::invalid_argument("empty operator chain");
    }
    return OperatorChain(std::move(ops));
}

SequenceDocument parse_sequence_document(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("sequence document needs a \"terms\" array");
    }
    SequenceDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw std::invalid_argument("\"name\" must be a string");
        }
        doc.sequence.name = j["name"].get<std::string>();
    }
    if (j.contains("offset")) {
        if (!j["offset"].is_number_integer()) {
            throw std::invalid_argument("\"offset\" must be an integer");
        }
        doc.offset = j["offset"].get<long>();
    }
    for (const auto &t : j["terms"]) {
        doc.sequence.terms.push_back(parse_term(t));
    }
    return doc;
}

std::string to_json(const SequenceDocument &doc) {
    json j = json::object();
    if (!doc.sequence.name.empty()) {
        j["name"] = doc.sequence.name;
    }
    j["offset"] = doc.offset;
    json terms = json::array();
    for (const auto &t : doc.sequence.terms) {
        terms.push_back(t.to_string());
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

PolySequence parse_poly_document(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("polys") || !j["polys"].is_array()) {
        throw std::invalid_argument("polynomial document needs a \"polys\" array");
    }
    PolySequence ps;
    if (j.contains("name") && j["name"].is_string()) {
        ps.name = j["name"].get<std::string>();
    }
    for (const auto &p : j["polys"]) {
        if (!p.is_array()) {
            throw std::invalid_argument("each polynomial must be an array of coefficients");
        }
        std::vector<Rational> c;
        for (const auto &t : p) {
            c.push_back(parse_term(t));
        }
        ps.polys.emplace_back(std::move(c));
    }
    return ps;
}

std::string to_json(const PolySequence &ps) {
    json j = json::object();
    if (!ps.name.empty()) {
        j["name"] = ps.name;
    }
    json polys = json::array();
    for (const auto &p : ps.polys) {
        json c = json::array();
        for (const auto &x : p.coeffs()) {
            c.push_back(x.to_string());
        }
        polys.push_back(std::move(c));
    }
    j["polys"] = std::move(polys);
    return j.dump();
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact sequence operators and their fixed sequences", "eigenseq"};
    app.require_subcommand(1);

    auto *emit = app.add_subcommand("emit", "emit a catalog sequence");
    std::string emit_name;
    std::size_t emit_terms = 32;
    emit->add_option("--name", emit_name, "catalog name")->required();
    emit->add_option("--terms", emit_terms, "number of terms")->check(CLI::PositiveNumber);

    auto *transform = app.add_subcommand("transform", "apply an operator chain");
    InputOptions transform_in;
    std::string transform_chain;
    transform_in.attach(transform);
    transform->add_option("--op,--chain", transform_chain, "operator chain, applied right to left")->required();

    auto *fixed = app.add_subcommand("fixed-check", "check that a sequence is fixed by an operator chain");
    InputOptions fixed_in;
    std::string fixed_chain;
    fixed_in.attach(fixed);
    fixed->add_option("--chain,--op", fixed_chain, "operator chain, applied right to left")->required();

    auto *worp = app.add_subcommand("worpitzky", "Worpitzky transform to a polynomial sequence");
    InputOptions worp_in;
    worp_in.attach(worp);

    auto *worpify_cmd = app.add_subcommand("worpify", "sequence whose Worpitzky polynomials take the input at 0");
    InputOptions worpify_in;
    worpify_in.attach(worpify_cmd);

    auto *eval = app.add_subcommand("eval-poly", "evaluate a polynomial sequence document at a point");
    std::string eval_file;
    std::string eval_at;
    eval->add_option("--file", eval_file, "polynomial document path, or - for stdin")->required();
    eval->add_option("--at", eval_at, "evaluation point (rational)")->required();

    auto *identity = app.add_subcommand("identity", "verify a named identity");
    std::string identity_name;
    InputOptions identity_in;
    std::string identity_target;
    std::string identity_h = "1";
    std::string identity_y = "1";
    identity->add_option("name", identity_name, "ff | catalan-motzkin | self-binomial")
        ->required()
        ->check(CLI::IsMember({"ff", "catalan-motzkin", "self-binomial"}));
    identity_in.attach(identity);
    identity->add_option("--target", identity_target, "catalog name of a (ff only; default L^(h,y) of the input)");
    identity->set_help_flag("--help", "Print this help message and exit");
    identity->add_option("--h", identity_h, "h (ff only)");
    identity->add_option("--y", identity_y, "y (ff only)");

    auto *revert_cmd = app.add_subcommand("revert", "Revert operator");
    InputOptions revert_in;
    revert_in.attach(revert_cmd);

    auto *invert_cmd = app.add_subcommand("invert", "Interpolated Invert operator");
    InputOptions invert_in;
    std::string invert_x;
    invert_in.attach(invert_cmd);
    invert_cmd->add_option("--x", invert_x, "x (rational)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const auto emit_doc = [&](Sequence s, long offset) {
        out << to_json(SequenceDocument{std::move(s), offset}) << '\n';
    };

    try {
        if (emit->parsed()) {
            emit_doc(get_sequence(emit_name, emit_terms), 0);
            return exit_ok;
        }
        if (transform->parsed()) {
            const auto chain = parse_chain(transform_chain);
            const auto doc = transform_in.load(in);
            emit_doc(apply_chain(chain, doc.sequence), doc.offset);
            return exit_ok;
        }
        if (fixed->parsed()) {
            const auto chain = parse_chain(fixed_chain);
            const auto doc = fixed_in.load(in);
            const auto image = apply_chain(chain, doc.sequence);
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (!(image[i] == doc.sequence[i])) {
                    out << "NOT FIXED at index " << i << ": input " << doc.sequence[i] << ", image " << image[i]
                        << '\n';
                    return exit_check_failed;
                }
            }
            out << "FIXED\n";
            return exit_ok;
        }
        if (worp->parsed()) {
            out << to_json(worpitzky(worp_in.load(in).sequence)) << '\n';
            return exit_ok;
        }
        if (worpify_cmd->parsed()) {
            const auto doc = worpify_in.load(in);
            emit_doc(worpify(doc.sequence), doc.offset);
            return exit_ok;
        }
        if (eval->parsed()) {
            const auto at = parse_rational_arg(eval_at, "--at");
            const auto ps = parse_poly_document(read_source(eval_file, in));
            emit_doc(poly_eval_sequence(ps, at), 0);
            return exit_ok;
        }
        if (identity->parsed()) {
            IdentityReport report;
            if (identity_name == "catalan-motzkin") {
                report = check_catalan_motzkin(identity_in.terms);
            } else {
                const auto doc = identity_in.load(in);
                const auto n = doc.sequence.size();
                if (identity_name == "self-binomial") {
                    report = check_self_binomial(doc.sequence, n);
                } else {
                    const auto h = parse_rational_arg(identity_h, "--h");
                    const auto y = parse_rational_arg(identity_y, "--y");
                    const auto a = identity_target.empty() ? gen_binomial(doc.sequence, h, y)
                                                           : get_sequence(identity_target, n);
                    report = check_ff(doc.sequence, a, h, y, n);
                }
            }
            out << describe(report) << '\n';
            return report.holds ? exit_ok : exit_check_failed;
        }
        if (revert_cmd->parsed()) {
            const auto doc = revert_in.load(in);
            emit_doc(apply_chain(OperatorChain{Revert{}}, doc.sequence), doc.offset);
            return exit_ok;
        }
        if (invert_cmd->parsed()) {
            const auto x = parse_rational_arg(invert_x, "--x");
            const auto doc = invert_in.load(in);
            emit_doc(apply_chain(OperatorChain{Invert{x}}, doc.sequence), doc.offset);
            return exit_ok;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

} // namespace eigenseq::cli
