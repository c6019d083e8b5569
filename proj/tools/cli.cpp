#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "emext/blocks.hpp"
#include "emext/chars.hpp"
#include "emext/emalg.hpp"
#include "emext/ext.hpp"
#include "emext/scenario.hpp"

namespace emext::cli {

namespace {

struct Options {
    bool porcelain = false;
    std::string config;
    std::string from, to;
    std::string rep;
    std::string a, b;
    std::vector<std::string> points;
    std::string g;
    std::string l, m;
    std::string u, v, w;
    std::string span_of;
};

std::string join(const std::vector<Int>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i].get_str();
    return s;
}

// Splits "a,b" or repeated flags into ids.
std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const auto& r : raw) {
        std::stringstream ss(r);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) ids.push_back(tok);
    }
    return ids;
}

void print_ext(const ExtResult& r, bool porcelain, std::ostream& out) {
    if (porcelain) {
        out << "finite_dim=" << r.finite_dim << '\n';
        std::string sym;
        for (const auto& s : r.infinite_summands) sym += (sym.empty() ? "" : ",") + format_symbolic(s);
        out << "symbolic=" << sym << '\n';
        for (std::size_t i = 0; i < r.breakdown.size(); ++i)
            out << "breakdown." << i << '=' << r.breakdown[i].second << ' ' << r.breakdown[i].first << '\n';
        return;
    }
    out << "Ext^1 = " << format_ext(r) << '\n';
    for (const auto& [what, n] : r.breakdown) out << "  " << n << "  " << what << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
}

int cmd_ext(const Options& o, std::ostream& out) {
    Document doc = load_document_file(o.config);
    print_ext(ext_dim(doc.algebra, doc.rep(o.from), doc.rep(o.to)), o.porcelain, out);
    return ok;
}

int cmd_blocks(const Options& o, std::ostream& out) {
    Document doc = load_document_file(o.config);
    auto blocks = enumerate_blocks(doc.algebra, split_ids(o.points));
    if (o.porcelain) {
        out << "count=" << blocks.size() << '\n';
        for (std::size_t i = 0; i < blocks.size(); ++i) out << "block." << i << '=' << blocks[i].to_string() << '\n';
    } else {
        out << blocks.size() << " block(s)\n";
        for (const auto& b : blocks) out << "  " << b.to_string() << '\n';
    }
    return ok;
}

int cmd_spectral(const Options& o, std::ostream& out) {
    Document doc = load_document_file(o.config);
    SpectralCharacter c = spectral_character(doc.algebra, doc.rep(o.rep));
    if (o.porcelain) {
        for (const auto& [pid, cls] : c.values) out << "value." << pid << '=' << cls.to_string() << '\n';
        out << "tag=" << c.noneval_tag << '\n';
    } else {
        out << c.to_string() << '\n';
    }
    return ok;
}

int cmd_sameblock(const Options& o, std::ostream& out) {
    Document doc = load_document_file(o.config);
    bool same = same_block(doc.algebra, doc.rep(o.a), doc.rep(o.b));
    out << (o.porcelain ? "same_block=" : "") << (same ? "yes" : "no") << '\n';
    return ok;
}

int cmd_tensor(const Options& o, std::ostream& out) {
    auto cd = cartan_data(o.g);
    ModuleExpr m = tensor_decompose(*cd, parse_weight(o.l), parse_weight(o.m));
    if (o.porcelain) {
        for (const auto& [label, mult] : m.terms) out << "term." << format_weight(label.highest_weight) << '=' << mult << '\n';
        out << "dim=" << dim(*cd, m).get_str() << '\n';
    } else {
        out << format_module(m) << '\n';
    }
    return ok;
}

ModuleExpr module_arg(const CartanData& cd, const std::string& text) {
    if (text == "adjoint") return adjoint_module(cd);
    ModuleExpr m;
    m.add(IrrepLabel{parse_weight(text), {}}, 1);
    return m;
}

int cmd_homdim(const Options& o, std::ostream& out) {
    auto cd = cartan_data(o.g);
    long h = hom_dim(*cd, module_arg(*cd, o.u), IrrepLabel{parse_weight(o.v), {}}, IrrepLabel{parse_weight(o.w), {}});
    out << (o.porcelain ? "hom_dim=" : "") << h << '\n';
    return ok;
}

int cmd_quotient(const Options& o, std::ostream& out) {
    auto cd = cartan_data(o.g);
    QuotientGroup q;
    if (o.span_of.empty()) {
        q = quotient_of(root_lattice(*cd));
    } else {
        WeightMultiset wts = module_weights(*cd, module_arg(*cd, o.span_of));
        q = weight_equivalence_quotient(*cd, wts);
    }
    auto f = q.nontrivial_factors();
    out << "factors=" << (f.empty() ? std::string("1") : join(f, ",")) << '\n';
    out << "order=" << (q.is_finite() ? q.order().get_str() : std::string("inf")) << '\n';
    return ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    Document doc = load_document_file(o.config);
    OracleComparison c = oracle_compare(doc.algebra, doc.rep(o.from), doc.rep(o.to));
    const char* verdict = c.agree ? "yes" : "no";
    if (o.porcelain) {
        out << "oracle_dim=" << c.oracle_dim << '\n'
            << "formula_dim=" << format_ext(c.formula) << '\n'
            << "agree=" << verdict << '\n';
    } else {
        out << "oracle_dim=" << c.oracle_dim << " formula_dim=" << format_ext(c.formula) << " agree=" << verdict
            << '\n';
        out << "  quotient: " << c.description << '\n';
    }
    return c.agree ? ok : disagreement;
}

int exit_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_input:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::not_dominant: return validation;
    case ErrorCode::nonfinite: return nonfinite;
    case ErrorCode::unsupported:
    case ErrorCode::inconsistent: return failure;
    }
    return failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ext^1 and block computations for equivariant map algebras", "emext"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--porcelain", o.porcelain, "key=value output");

    auto with_config = [&](CLI::App* sub) {
        sub->add_option("config", o.config, "configuration document")->required()->check(CLI::ExistingFile);
        sub->add_flag("--porcelain", o.porcelain, "key=value output");
        return sub;
    };
    auto with_flag = [&](CLI::App* sub) {
        sub->add_flag("--porcelain", o.porcelain, "key=value output");
        return sub;
    };

    auto* ext = with_config(app.add_subcommand("ext", "Ext^1 between two reps"));
    ext->add_option("--from", o.from)->required();
    ext->add_option("--to", o.to)->required();

    auto* blocks = with_config(app.add_subcommand("blocks", "enumerate spectral characters"));
    blocks->add_option("--points", o.points)->required();

    auto* spectral = with_config(app.add_subcommand("spectral", "spectral character of a rep"));
    spectral->add_option("--rep", o.rep)->required();

    auto* sameblock = with_config(app.add_subcommand("sameblock", "whether two reps share a block"));
    sameblock->add_option("--a", o.a)->required();
    sameblock->add_option("--b", o.b)->required();

    auto* tensor = with_flag(app.add_subcommand("tensor", "decompose V(l) (x) V(m)"));
    tensor->add_option("--g", o.g)->required();
    tensor->add_option("--l", o.l)->required();
    tensor->add_option("--m", o.m)->required();

    auto* homdim = with_flag(app.add_subcommand("homdim", "dim Hom_g(U (x) V, W)"));
    homdim->add_option("--g", o.g)->required();
    homdim->add_option("--u", o.u)->required();
    homdim->add_option("--v", o.v)->required();
    homdim->add_option("--w", o.w)->required();

    auto* oracle = with_config(app.add_subcommand("oracle", "brute-force check of ext"));
    oracle->add_option("--from", o.from)->required();
    oracle->add_option("--to", o.to)->required();

    auto* quotient = with_flag(app.add_subcommand("quotient", "invariant factors of P/Q or P/Span"));
    quotient->add_option("--g", o.g)->required();
    quotient->add_option("--span-of", o.span_of);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return validation;
    }

    try {
        if (*ext) return cmd_ext(o, out);
        if (*blocks) return cmd_blocks(o, out);
        if (*spectral) return cmd_spectral(o, out);
        if (*sameblock) return cmd_sameblock(o, out);
        if (*tensor) return cmd_tensor(o, out);
        if (*homdim) return cmd_homdim(o, out);
        if (*oracle) return cmd_oracle(o, out);
        if (*quotient) return cmd_quotient(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}

}  // namespace emext::cli
