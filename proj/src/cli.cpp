#include "weil/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "weil/bundle.hpp"
#include "weil/errors.hpp"
#include "weil/verify.hpp"

namespace weil {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void print_algebra_summary(std::ostream& os, const WeilAlgebra& A) {
    os << "dimension " << A.dim() << "\n";
    os << "basis:";
    for (const std::string& b : A.basis_labels()) os << " " << b;
    os << "\n";
    os << "presentation: " << A.presentation().str() << "\n";
}

void print_subspace(std::ostream& os, const AlgebraPtr& ambient, const LinSubspace& space) {
    os << "basis of the subalgebra (inside " << ambient->presentation().str() << "):\n";
    for (size_t r = 0; r < space.dim(); ++r)
        os << "  " << ambient->element(space.rows().row(r)).str() << "\n";
}

int cmd_parse(const std::string& text, bool as_json) {
    AlgebraPtr A = build_weil_algebra(parse_presentation(text));
    if (as_json)
        std::cout << algebra_to_json(*A).dump(2) << "\n";
    else
        print_algebra_summary(std::cout, *A);
    return 0;
}

int cmd_tensor(const std::string& t1, const std::string& t2, bool as_json) {
    AlgebraPtr W1 = build_weil_algebra(parse_presentation(t1));
    AlgebraPtr W2 = build_weil_algebra(parse_presentation(t2));
    TensorProduct T = tensor_infinity(W1, W2);
    if (as_json)
        std::cout << algebra_to_json(*T.algebra).dump(2) << "\n";
    else
        print_algebra_summary(std::cout, *T.algebra);
    return 0;
}

int cmd_fibered_tensor(const std::string& t1, const std::string& t2, bool as_json) {
    AlgebraPtr W1 = build_weil_algebra(parse_presentation(t1));
    AlgebraPtr W2 = build_weil_algebra(parse_presentation(t2));
    FiberedTensor F = fibered_tensor(W1, W2);
    if (as_json) {
        Json j = algebra_to_json(*F.algebra);
        Json rows = Json::array();
        for (size_t r = 0; r < F.space.dim(); ++r)
            rows.push_back(F.tensor.algebra->element(F.space.rows().row(r)).str());
        j["ambient"] = F.tensor.algebra->presentation().str();
        j["ambient_basis"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << F.algebra->dim() << "\n";
        print_subspace(std::cout, F.tensor.algebra, F.space);
    }
    return 0;
}

int cmd_equalizer(const std::string& path, bool as_json) {
    Diagram d = diagram_from_json_text(read_file(path));
    if (d.edges.size() != 2 || d.edges[0].from != d.edges[1].from ||
        d.edges[0].to != d.edges[1].to)
        throw Error("equalizer expects a diagram with exactly one parallel pair of edges");
    LimitResult E = equalizer(d.edges[0].hom, d.edges[1].hom);
    if (as_json) {
        Json j = algebra_to_json(*E.algebra);
        Json rows = Json::array();
        for (size_t r = 0; r < E.space.dim(); ++r)
            rows.push_back(E.ambient->element(E.space.rows().row(r)).str());
        j["ambient_basis"] = rows;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << E.algebra->dim() << "\n";
        print_subspace(std::cout, E.ambient, E.space);
    }
    return 0;
}

int cmd_limit(const std::string& path, bool as_json) {
    Diagram d = diagram_from_json_text(read_file(path));
    LimitResult L = finite_limit(d);
    if (as_json) {
        Json j = algebra_to_json(*L.algebra);
        j["nodes"] = L.node_order;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << L.algebra->dim() << "\n";
        print_subspace(std::cout, L.ambient, L.space);
    }
    return 0;
}

int cmd_jet(const std::string& expr_text, const std::string& algebra_text,
            const std::string& at_text, const std::string& mode, bool as_json) {
    Expr f = parse_expr(expr_text);
    AlgebraPtr W = build_weil_algebra(parse_presentation(algebra_text));
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : at_text) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        parts.push_back(cur);
    }
    size_t arity = expr_arity(f);
    if (parts.size() != std::max<size_t>(arity, 1))
        throw Error("--at needs " + std::to_string(std::max<size_t>(arity, 1)) +
                    " comma-separated values");
    if (arity > W->presentation().nvars())
        throw Error("expression arity exceeds the number of algebra generators");

    if (mode == "exact") {
        WPoint p;
        p.alg = W;
        for (size_t i = 0; i < arity; ++i)
            p.coords.push_back(rat_from_string(parts[i]) * W->one() + W->generator(i));
        Element out = eval_jet(f, p);
        if (as_json) {
            Json j;
            j["basis"] = W->basis_labels();
            Json coeffs = Json::array();
            for (const Rat& q : out.c) coeffs.push_back(rat_str(q));
            j["coefficients"] = std::move(coeffs);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << out.str() << "\n";
            std::cout << "coefficients:";
            for (const Rat& q : out.c) std::cout << " " << rat_str(q);
            std::cout << "\n";
        }
    } else if (mode == "float") {
        std::vector<std::vector<double>> coords;
        for (size_t i = 0; i < arity; ++i) {
            std::vector<double> c(W->dim(), 0.0);
            c[0] = rat_double(rat_from_string(parts[i]));
            Element g = W->generator(i);
            for (size_t t = 0; t < W->dim(); ++t) c[t] += rat_double(g.c[t]);
            coords.push_back(std::move(c));
        }
        std::vector<double> out = eval_jet_float(f, W, coords);
        if (as_json) {
            Json j;
            j["basis"] = W->basis_labels();
            j["coefficients"] = out;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "coefficients:";
            for (double v : out) std::cout << " " << v;
            std::cout << "\n";
        }
    } else {
        throw Error("--mode must be exact or float");
    }
    return 0;
}

int cmd_verify(const std::string& which, bool as_json) {
    std::vector<SuiteReport> reports;
    if (which == "all")
        reports = run_all_suites();
    else
        reports.push_back(run_suite(which));

    bool all_ok = true;
    for (const SuiteReport& r : reports) all_ok = all_ok && r.ok();

    if (as_json) {
        if (reports.size() == 1) {
            std::cout << reports[0].to_json().dump(2) << "\n";
        } else {
            Json arr = Json::array();
            for (const SuiteReport& r : reports) arr.push_back(r.to_json());
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const SuiteReport& r : reports) r.print_table(std::cout);
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"weil - exact Weil-algebra calculus, jets and verification suites"};
    app.require_subcommand(1);

    std::string pres1, pres2, diagram_path, expr_text, algebra_text, at_text;
    std::string mode = "exact";
    std::string suite;
    bool as_json = false;

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse a presentation and build the algebra");
    parse_cmd->add_option("presentation", pres1)->required();
    parse_cmd->add_flag("--json", as_json);

    CLI::App* tensor_cmd = app.add_subcommand("tensor", "tensor product of two presentations");
    tensor_cmd->add_option("p1", pres1)->required();
    tensor_cmd->add_option("p2", pres2)->required();
    tensor_cmd->add_flag("--json", as_json);

    CLI::App* ft_cmd = app.add_subcommand("fibered-tensor", "fibered tensor of two presentations");
    ft_cmd->add_option("p1", pres1)->required();
    ft_cmd->add_option("p2", pres2)->required();
    ft_cmd->add_flag("--json", as_json);

    CLI::App* eq_cmd = app.add_subcommand("equalizer", "equalizer of a parallel pair (diagram JSON)");
    eq_cmd->add_option("diagram", diagram_path)->required();
    eq_cmd->add_flag("--json", as_json);

    CLI::App* lim_cmd = app.add_subcommand("limit", "finite limit of a diagram (JSON)");
    lim_cmd->add_option("diagram", diagram_path)->required();
    lim_cmd->add_flag("--json", as_json);

    CLI::App* jet_cmd = app.add_subcommand("jet", "evaluate an expression on a W-point");
    jet_cmd->add_option("--expr", expr_text)->required();
    jet_cmd->add_option("--algebra", algebra_text)->required();
    jet_cmd->add_option("--at", at_text)->required();
    jet_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    jet_cmd->add_flag("--json", as_json);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite (or 'all')");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (parse_cmd->parsed()) return cmd_parse(pres1, as_json);
        if (tensor_cmd->parsed()) return cmd_tensor(pres1, pres2, as_json);
        if (ft_cmd->parsed()) return cmd_fibered_tensor(pres1, pres2, as_json);
        if (eq_cmd->parsed()) return cmd_equalizer(diagram_path, as_json);
        if (lim_cmd->parsed()) return cmd_limit(diagram_path, as_json);
        if (jet_cmd->parsed()) return cmd_jet(expr_text, algebra_text, at_text, mode, as_json);
        if (verify_cmd->parsed()) return cmd_verify(suite, as_json);
    } catch (const UnknownSuiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace weil
