#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ihxlab/config.hpp"
#include "ihxlab/enumerate.hpp"
#include "ihxlab/errors.hpp"
#include "ihxlab/relations.hpp"
#include "ihxlab/symplectic.hpp"
#include "ihxlab/verify.hpp"

using namespace ihxlab;

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw StructuralError("cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    std::istringstream is(buf.str());
    std::string line, out;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        out += line + '\n';
    }
    return out;
}

std::string first_word(const std::string& text) {
    std::istringstream is(text);
    std::string w;
    is >> w;
    return w;
}

// A TG1 graph or a poly1 polynomial.
GraphPolynomial read_polynomial(const std::string& path) {
    const std::string text = read_input(path);
    const std::string head = first_word(text);
    if (head == "tg1") return GraphPolynomial::of(TrivalentGraph::parse_tg1(text));
    if (head == "poly1") return GraphPolynomial::parse(text);
    throw StructuralError("expected a tg1 graph or a poly1 polynomial");
}

std::uint32_t polynomial_degree(const GraphPolynomial& p) {
    if (p.empty()) throw PreconditionError("empty polynomial");
    return p.terms().begin()->first.degree;
}

Space invariant_space(const std::string& name, std::uint32_t m) {
    if (name == "ext-lambda3") return Space::ext_ext3(2 * m);
    if (name == "ext-u") return Space::ext_u(2 * m);
    if (name == "ext-sym3") return Space::ext_sym3(2 * m);
    return Space::parse(name);
}

} // namespace

int main(int argc, char** argv) {
    std::string command_line;
    for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

    CLI::App app{"trivalent graph algebras and symplectic invariant tensors"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t term_cap = limits().term_cap, class_cap = limits().class_cap;
    unsigned threads = limits().threads;
    std::string output;
    bool timing = false;
    app.add_option("--term-cap", term_cap, "maximum intermediate terms")->check(CLI::PositiveNumber);
    app.add_option("--class-cap", class_cap, "maximum graph classes")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", output, "write the report to a file");
    app.add_flag("--timing", timing, "append wall-clock time (breaks byte-identical output)");

    std::uint32_t degree = 1, genus = 1;
    bool connected = false, no_loops = false, oriented = false;
    std::string relations, file, target = "exterior", space, eq, partition, suite;

    auto* en = app.add_subcommand("enumerate", "list isomorphism classes of degree-m graphs");
    en->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    en->add_flag("--connected", connected);
    en->add_flag("--no-loops", no_loops);
    en->add_flag("--oriented", oriented);

    auto* ca = app.add_subcommand("canon", "canonical form of a TG1 graph");
    ca->add_option("file", file)->required();

    auto* ra = app.add_subcommand("rank", "quotient rank of the relation span");
    ra->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    ra->add_option("--relations", relations)->required();
    ra->add_flag("--connected", connected, "indecomposables only");

    auto* re = app.add_subcommand("reduce", "E_n normal form modulo ih0 and loop");
    re->add_option("--relations", relations)->required();
    re->add_option("file", file)->required();

    auto* al = app.add_subcommand("alpha", "evaluate alpha of a graph or polynomial");
    al->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    al->add_option("--target", target)->check(CLI::IsMember({"exterior", "u", "symmetric"}));
    al->add_option("file", file)->required();

    auto* iv = app.add_subcommand("invariants", "dimension of the sp invariants");
    iv->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    iv->add_option("--space", space)->required();
    iv->add_option("--graph-degree", degree)->required()->check(CLI::PositiveNumber);

    auto* di = app.add_subcommand("dims", "Weyl dimensions and decomposition sums");
    di->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    auto* eq_opt = di->add_option("--eq", eq)->check(CLI::IsMember({"1.1", "1.3"}));
    auto* part_opt = di->add_option("--partition", partition);
    eq_opt->excludes(part_opt);

    auto* ve = app.add_subcommand("verify", "run acceptance suites");
    ve->add_option("suite", suite)->required()->check(CLI::IsMember({"graphs", "relations", "symplectic", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    limits().term_cap = term_cap;
    limits().class_cap = class_cap;
    limits().threads = threads;

    std::ostringstream out;
    out << "# command=" << command_line << '\n';
    out << "# term_cap=" << term_cap << " class_cap=" << class_cap << " threads=" << threads << '\n';
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (*en) {
            auto classes = enumerate(degree, {.connected_only = connected, .allow_loops = !no_loops, .oriented = oriented});
            out << "count=" << classes.size() << '\n';
            for (const auto& c : classes) {
                out << "# sign=" << c.cls.sign << " connected=" << c.connected << " loop=" << c.has_loop << '\n';
                out << c.representative.to_tg1() << '\n';
            }
        } else if (*ca) {
            auto g = TrivalentGraph::parse_tg1(read_input(file));
            auto c = canonicalize(g);
            out << "sign=" << c.sign << " degree=" << c.degree << '\n' << c.encoding;
        } else if (*ra) {
            auto r = quotient_rank(degree, parse_relation_specs(relations), connected);
            out << "degree=" << r.degree << "\nrelations=" << r.specs << "\nconnected_only=" << r.connected_only
                << "\nclasses=" << r.classes << "\nrelation_vectors=" << r.relations << "\nrank=" << r.rank
                << "\nrank_second_order=" << r.rank_second_order << "\nrank_mod_p=" << r.rank_mod_p
                << "\nquotient_dimension=" << r.quotient_dimension << '\n';
            if (r.rank != r.rank_second_order || r.rank != r.rank_mod_p) {
                throw VerificationFailure("rank methods disagree");
            }
        } else if (*re) {
            if (spec_list_name(parse_relation_specs(relations)) != spec_list_name(parse_relation_specs("ih0,loop"))) {
                throw PreconditionError("reduce supports --relations ih0,loop only");
            }
            auto nf = reduce_to_E_normal_form(read_polynomial(file));
            out << "terms=" << nf.size() << '\n';
            for (const auto& [mono, c] : nf) out << "coeff=" << format_rational(c) << " monomial=" << format_monomial(mono) << '\n';
        } else if (*al) {
            auto p = read_polynomial(file);
            const Target t = parse_target(target);
            if (t == Target::symmetric && !p.oriented()) throw PreconditionError("symmetric target needs an oriented graph");
            if (t != Target::symmetric && p.oriented()) {
                GraphPolynomial q(false);
                for (const auto& [cls, c] : p.terms()) q.add_graph(representative(cls).with_orientation(false), c);
                p = q;
            }
            out << alpha(p, polynomial_degree(p), genus, t).to_text();
        } else if (*iv) {
            const Space s = invariant_space(space, degree);
            out << "genus=" << genus << "\nspace=" << s.name() << "\ndimension=" << space_dimension(genus, s).get_str()
                << "\ninvariants=" << invariant_dimension(genus, s) << '\n';
        } else if (*di) {
            if (!eq.empty()) {
                auto r = verify_decomposition(genus, eq);
                out << "equation=" << r.equation << "\ngenus=" << r.genus << '\n';
                for (const auto& [p, d] : r.summands) out << "summand=" << format_partition(p) << " dim=" << d.get_str() << '\n';
                out << "total=" << r.total.get_str() << "\nambient=" << r.ambient.get_str() << "\nholds=" << r.holds() << '\n';
                if (!r.holds()) throw VerificationFailure("decomposition total differs from ambient dimension");
            } else if (!partition.empty()) {
                auto p = parse_partition(partition);
                out << "genus=" << genus << "\npartition=" << format_partition(p)
                    << "\ndim=" << weyl_dimension(genus, p).get_str() << '\n';
            } else {
                throw PreconditionError("dims needs --eq or --partition");
            }
        } else if (*ve) {
            auto r = run_suite(suite);
            out << "suite=" << suite << '\n' << r.to_text();
            const auto bad = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass; });
            out << "passed=" << r.passed() << '\n';
            if (bad != r.checks.end()) throw VerificationFailure(bad->name);
        }
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        out << "first_failure=" << e.what() << '\n';
        code = 1;
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return 3;
    } catch (const StructuralError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const TypeMismatchError& e) {
        std::cerr << "type mismatch: " << e.what() << '\n';
        return 2;
    }
    if (timing) {
        out << "# seconds=" << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << '\n';
    }
    if (output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "cannot write '" << output << "'\n";
            return 2;
        }
        f << out.str();
    }
    return code;
}
