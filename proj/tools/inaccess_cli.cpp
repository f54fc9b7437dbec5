// Command-line surface over the library: lattice inspection, model algebra,
// MES states, inaccessibility measures, quasi-probability rules, the qubit
// dictionary, and the verification sweep. Machine-readable output on stdout
// (JSON, CSV or DOT), diagnostics on stderr. Exit codes: 0 pass, 1 check
// failure, 2 usage error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inaccess/verify.hpp"

using namespace inaccess;

namespace {

// ---------------------------------------------------------------------------
// Constant-expression parser for numeric tokens: +, -, *, /, sqrt and
// parentheses, so exact fractions ("1/3") and surd inputs ("(3+sqrt(33))/24")
// survive the command line.
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    double parse() {
        const double v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw std::invalid_argument("trailing input in expression: " + text_);
        return v;
    }

private:
    double expr() {
        double v = term();
        while (true) {
            skip_ws();
            if (consume('+'))
                v += term();
            else if (consume('-'))
                v -= term();
            else
                return v;
        }
    }
    double term() {
        double v = unary();
        while (true) {
            skip_ws();
            if (consume('*'))
                v *= unary();
            else if (consume('/'))
                v /= unary();
            else
                return v;
        }
    }
    double unary() {
        skip_ws();
        if (consume('-')) return -unary();
        return primary();
    }
    double primary() {
        skip_ws();
        if (consume('(')) {
            const double v = expr();
            expect(')');
            return v;
        }
        if (text_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            skip_ws();
            expect('(');
            const double v = expr();
            expect(')');
            return std::sqrt(v);
        }
        return number();
    }
    double number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                text_[pos_] == 'e' || text_[pos_] == 'E' ||
                ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                 (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
            ++pos_;
        if (pos_ == start) throw std::invalid_argument("expected a number in expression: " + text_);
        return std::stod(text_.substr(start, pos_ - start));
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument(std::string("expected '") + c + "' in expression: " + text_);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

double parse_scalar(const std::string& token) { return ExprParser(token).parse(); }

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> out;
    std::string token;
    for (char c : text) {
        if (c == ',') {
            out.push_back(parse_scalar(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) out.push_back(parse_scalar(token));
    return out;
}

std::vector<std::vector<double>> parse_vector_list(const std::string& text) {
    std::vector<std::vector<double>> out;
    std::string group;
    for (char c : text) {
        if (c == ';') {
            out.push_back(parse_vector(group));
            group.clear();
        } else {
            group += c;
        }
    }
    if (!group.empty()) out.push_back(parse_vector(group));
    return out;
}

std::vector<int> parse_atom_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_vector(text)) out.push_back(static_cast<int>(v));
    return out;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

QuasiState state_from_options(const std::string& inline_q, const std::string& file) {
    if (!inline_q.empty()) return parse_vector(inline_q);
    if (!file.empty()) {
        const nlohmann::json j = load_json(file);
        const nlohmann::json& arr = j.is_object() && j.contains("q") ? j["q"] : j;
        return arr.get<std::vector<double>>();
    }
    throw std::invalid_argument("provide a state with --q or --file");
}

DensityMatrix rho_from_options(const std::string& named, const std::string& bloch,
                               const std::string& file) {
    if (!named.empty()) {
        if (named == "identity/2" || named == "mixed") return density_from_bloch({0, 0, 0});
        if (named == "z+") return density_from_bloch({0, 0, 1});
        if (named == "z-") return density_from_bloch({0, 0, -1});
        if (named == "x+") return density_from_bloch({1, 0, 0});
        if (named == "x-") return density_from_bloch({-1, 0, 0});
        if (named == "y+") return density_from_bloch({0, 1, 0});
        if (named == "y-") return density_from_bloch({0, -1, 0});
        throw std::invalid_argument("unknown named state: " + named +
                                    " (use identity/2, x+, x-, y+, y-, z+, z-)");
    }
    if (!bloch.empty()) {
        const std::vector<double> r = parse_vector(bloch);
        if (r.size() != 3) throw std::invalid_argument("--bloch needs three components");
        return density_from_bloch({r[0], r[1], r[2]});
    }
    if (!file.empty()) {
        const nlohmann::json j = load_json(file);
        const auto re = j.at("re").get<std::vector<std::vector<double>>>();
        const auto im = j.at("im").get<std::vector<std::vector<double>>>();
        if (re.size() != 2 || im.size() != 2 || re[0].size() != 2 || im[0].size() != 2 ||
            re[1].size() != 2 || im[1].size() != 2)
            throw std::invalid_argument("--file density matrix must be 2x2 re/im");
        DensityMatrix rho;
        rho.a = {re[0][0], im[0][0]};
        rho.b = {re[0][1], im[0][1]};
        rho.c = {re[1][0], im[1][0]};
        rho.d = {re[1][1], im[1][1]};
        return rho;
    }
    throw std::invalid_argument("provide a density matrix with --rho, --bloch or --file");
}

void emit(const JsonWriter& w) { std::cout << w.str() << "\n"; }

JsonWriter& write_rho(JsonWriter& w, const DensityMatrix& rho) {
    w.key("re").begin_array();
    w.begin_array().value(rho.a.real()).value(rho.b.real()).end_array();
    w.begin_array().value(rho.c.real()).value(rho.d.real()).end_array();
    w.end_array();
    w.key("im").begin_array();
    w.begin_array().value(rho.a.imag()).value(rho.b.imag()).end_array();
    w.begin_array().value(rho.c.imag()).value(rho.d.imag()).end_array();
    w.end_array();
    return w;
}

JsonWriter& write_marginals(JsonWriter& w, const AccessibleMarginals& am) {
    w.begin_array();
    for (const auto& p : am.vectors) w.value(p);
    return w.end_array();
}

std::vector<Statement> blocks_from_string(const std::string& text, int D) {
    std::vector<Statement> blocks;
    for (const auto& group : parse_vector_list(text)) {
        std::vector<int> atoms;
        for (double v : group) atoms.push_back(static_cast<int>(v));
        blocks.push_back(Statement::from_atoms(atoms, D));
    }
    return blocks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theory-of-inaccessible-information toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // let --tol appear after the subcommand as well

    int exit_code = 0;
    double tol = kDefaultTol;
    app.add_option("--tol", tol, "numeric tolerance for membership and consistency tests")
        ->capture_default_str();

    // ------------------------------------------------------------- lattice
    auto* lattice = app.add_subcommand("lattice", "Boolean lattices with accessibility labels");
    lattice->require_subcommand(1);
    {
        auto* show = lattice->add_subcommand("show", "ideal configuration summary");
        auto D = std::make_shared<int>(4);
        auto d = std::make_shared<int>(2);
        show->add_option("--D", *D, "atom count")->required();
        show->add_option("--d", *d, "accessibility-depth")->required();
        show->callback([D, d]() {
            const auto blocks = ideal_blocks(*D, *d);
            const Configuration cfg = ideal_configuration(*D, *d);
            JsonWriter w;
            w.begin_object();
            w.key("D").value(*D);
            w.key("d").value(*d);
            w.key("statement_count").value(static_cast<long long>(statement_count(*D)));
            w.key("blocks").begin_array();
            for (const auto& b : blocks) w.value(b.atom_indices());
            w.end_array();
            w.key("accessible_count").value(cfg.access.accessible_set().size());
            w.end_object();
            emit(w);
        });

        auto* check = lattice->add_subcommand("check", "admissibility of a configuration");
        auto cD = std::make_shared<int>(4);
        auto cd = std::make_shared<int>(2);
        auto cblocks = std::make_shared<std::string>();
        check->add_option("--D", *cD, "atom count")->required();
        check->add_option("--d", *cd, "accessibility-depth")->required();
        check->add_option("--blocks", *cblocks,
                          "accessible statements as atom lists, e.g. \"0,1;2,3\" (default: ideal)");
        check->callback([cD, cd, cblocks, &exit_code]() {
            const Configuration cfg = cblocks->empty()
                                          ? ideal_configuration(*cD, *cd)
                                          : configuration_from_blocks(*cD, *cd,
                                                                      blocks_from_string(*cblocks, *cD));
            const AdmissibilityReport rep = is_admissible_access(cfg);
            JsonWriter w;
            w.begin_object();
            w.key("admissible").value(rep.ok);
            w.key("violations").begin_array();
            for (const auto& v : rep.violations) w.value(v);
            w.end_array();
            w.end_object();
            emit(w);
            if (!rep.ok) exit_code = 1;
        });

        auto* dot = lattice->add_subcommand("dot", "Hasse diagram in DOT format");
        auto dD = std::make_shared<int>(4);
        auto dd = std::make_shared<int>(2);
        auto dblocks = std::make_shared<std::string>();
        dot->add_option("--D", *dD, "atom count (<= 6)")->required();
        dot->add_option("--d", *dd, "accessibility-depth")->required();
        dot->add_option("--blocks", *dblocks, "accessible statements (default: ideal)");
        dot->callback([dD, dd, dblocks]() {
            const Configuration cfg = dblocks->empty()
                                          ? ideal_configuration(*dD, *dd)
                                          : configuration_from_blocks(*dD, *dd,
                                                                      blocks_from_string(*dblocks, *dD));
            std::cout << to_dot(cfg);
        });
    }

    // ------------------------------------------------------------- model
    auto* model = app.add_subcommand("model", "model classification, composition, inflation");
    model->require_subcommand(1);
    {
        auto* classify_cmd = model->add_subcommand("classify", "classical / useless / nontrivial");
        auto D = std::make_shared<std::int64_t>(4);
        auto d = std::make_shared<std::int64_t>(2);
        classify_cmd->add_option("--D", *D)->required();
        classify_cmd->add_option("--d", *d)->required();
        classify_cmd->callback([D, d]() {
            const ModelClass cls = classify(Model(*D, *d));
            JsonWriter w;
            w.begin_object();
            const char* tag = cls.tag == ModelTag::Classical  ? "classical"
                              : cls.tag == ModelTag::Useless ? "useless"
                                                              : "nontrivial";
            w.key("class").value(tag);
            w.key("m").value(static_cast<long long>(cls.m));
            w.end_object();
            emit(w);
        });

        auto* compose_cmd = model->add_subcommand("compose", "compose two models");
        auto D1 = std::make_shared<std::int64_t>(2), d1 = std::make_shared<std::int64_t>(2);
        auto D2 = std::make_shared<std::int64_t>(2), d2 = std::make_shared<std::int64_t>(1);
        compose_cmd->add_option("--D1", *D1)->required();
        compose_cmd->add_option("--d1", *d1)->required();
        compose_cmd->add_option("--D2", *D2)->required();
        compose_cmd->add_option("--d2", *d2)->required();
        compose_cmd->callback([D1, d1, D2, d2]() {
            const ComposedModel c = compose(Model(*D1, *d1), Model(*D2, *d2));
            JsonWriter w;
            w.begin_object();
            w.key("model").begin_array().value(static_cast<long long>(c.model.dim))
                .value(static_cast<long long>(c.model.depth)).end_array();
            w.key("blocks").begin_array();
            for (const auto& b : c.blocks) w.value(b);
            w.end_array();
            w.end_object();
            emit(w);
        });

        auto* inflate_cmd = model->add_subcommand("inflate", "inflate a classical model");
        auto m = std::make_shared<std::int64_t>(2);
        auto c = std::make_shared<int>(1);
        inflate_cmd->add_option("--m", *m, "classical dimension")->required();
        inflate_cmd->add_option("--c", *c, "inflation parameter")->capture_default_str();
        inflate_cmd->callback([m, c]() {
            const Model inflated = inflate(*m, *c);
            JsonWriter w;
            w.begin_object();
            w.key("model").begin_array().value(static_cast<long long>(inflated.dim))
                .value(static_cast<long long>(inflated.depth)).end_array();
            w.end_object();
            emit(w);
        });

        auto* inflations_cmd = model->add_subcommand("inflations", "allowed inflation dimensions");
        auto im = std::make_shared<std::int64_t>(2);
        auto id = std::make_shared<std::int64_t>(2);
        inflations_cmd->add_option("--m", *im, "classical dimension")->required();
        inflations_cmd->add_option("--d", *id, "accessibility-depth")->required();
        inflations_cmd->callback([im, id]() {
            JsonWriter w;
            w.begin_object();
            w.key("allowed_D").begin_array();
            for (std::int64_t D : allowed_inflations(*im, *id)) w.value(static_cast<long long>(D));
            w.end_array();
            w.end_object();
            emit(w);
        });
    }

    // ------------------------------------------------------------- mes
    auto* mes = app.add_subcommand("mes", "maximal expressive standard models");
    mes->require_subcommand(1);
    {
        auto* build = mes->add_subcommand("build", "construct the d+1 partitions");
        auto d = std::make_shared<int>(2);
        build->add_option("--d", *d, "prime accessibility-depth")->required();
        build->callback([d]() {
            const MesModel m = MesModel::build(*d);
            JsonWriter w;
            w.begin_object();
            w.key("d").value(*d);
            w.key("partitions").begin_array();
            for (const auto& part : m.partitions()) {
                w.begin_array();
                for (const auto& block : part) w.value(block);
                w.end_array();
            }
            w.end_array();
            w.end_object();
            emit(w);
        });

        auto* marg = mes->add_subcommand("marginals", "accessible probability vectors of a state");
        auto md = std::make_shared<int>(2);
        auto mq = std::make_shared<std::string>();
        auto mfile = std::make_shared<std::string>();
        marg->add_option("--d", *md)->required();
        marg->add_option("--q", *mq, "state as comma-separated expressions");
        marg->add_option("--file", *mfile, "JSON file with the state");
        marg->callback([md, mq, mfile]() {
            const MesModel m = MesModel::build(*md);
            const QuasiState q = state_from_options(*mq, *mfile);
            JsonWriter w;
            w.begin_object();
            w.key("marginals");
            write_marginals(w, marginals(m, q));
            w.end_object();
            emit(w);
        });

        auto* rec = mes->add_subcommand("reconstruct", "state from its accessible marginals");
        auto rd = std::make_shared<int>(2);
        auto rp = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();
        rec->add_option("--d", *rd)->required();
        rec->add_option("--p", *rp, "marginals as \"p11,p12;p21,p22;...\"");
        rec->add_option("--file", *rfile, "JSON file with an array of marginal vectors");
        rec->callback([rd, rp, rfile, &tol]() {
            const MesModel m = MesModel::build(*rd);
            AccessibleMarginals am;
            if (!rp->empty())
                am.vectors = parse_vector_list(*rp);
            else if (!rfile->empty())
                am.vectors = load_json(*rfile).get<std::vector<std::vector<double>>>();
            else
                throw std::invalid_argument("provide marginals with --p or --file");
            JsonWriter w;
            w.begin_object();
            w.key("q").value(reconstruct(m, am, tol));
            w.end_object();
            emit(w);
        });

        auto* member = mes->add_subcommand("member", "state-space membership tests");
        auto ed = std::make_shared<int>(2);
        auto eq = std::make_shared<std::string>();
        auto efile = std::make_shared<std::string>();
        auto emode = std::make_shared<std::string>("blocks");
        member->add_option("--d", *ed)->required();
        member->add_option("--q", *eq, "state");
        member->add_option("--file", *efile, "JSON file with the state");
        member->add_option("--mode", *emode, "blocks|all")->capture_default_str();
        member->callback([ed, eq, efile, emode, &tol, &exit_code]() {
            const MesModel m = MesModel::build(*ed);
            const QuasiState q = state_from_options(*eq, *efile);
            const MembershipMode mode =
                *emode == "all" ? MembershipMode::AllLevelD : MembershipMode::BlocksOnly;
            const bool member_ok = in_mes_set(m, q, mode, tol);
            const bool admissible = member_ok && chi(q) >= m.depth() - tol;
            JsonWriter w;
            w.begin_object();
            w.key("in_mes_set").value(member_ok);
            w.key("chi").value(chi(q));
            w.key("in_state_space").value(admissible);
            w.key("pure").value(admissible && std::abs(chi(q) - m.depth()) <= tol);
            w.end_object();
            emit(w);
            if (!admissible) exit_code = 1;
        });

        auto* smp = mes->add_subcommand("sample", "draw admissible states");
        auto sd = std::make_shared<int>(2);
        auto sn = std::make_shared<int>(100);
        auto sseed = std::make_shared<std::uint64_t>(1);
        auto sformat = std::make_shared<std::string>("csv");
        smp->add_option("--d", *sd)->required();
        smp->add_option("--n", *sn, "sample count")->capture_default_str();
        smp->add_option("--seed", *sseed)->capture_default_str();
        smp->add_option("--format", *sformat, "csv|json")->capture_default_str();
        smp->callback([sd, sn, sseed, sformat, &tol]() {
            const MesModel m = MesModel::build(*sd);
            const auto states = sample(m, *sn, *sseed, tol);
            if (*sformat == "json") {
                JsonWriter w;
                w.begin_array();
                for (const auto& q : states) w.value(q);
                w.end_array();
                emit(w);
                return;
            }
            for (int i = 0; i < m.atom_count(); ++i) std::cout << "q_" << i << ",";
            std::cout << "chi,pure\n";
            for (const auto& q : states) {
                for (double x : q) std::cout << format_double(x) << ",";
                const double x2 = chi(q);
                std::cout << format_double(x2) << ","
                          << (std::abs(x2 - m.depth()) <= tol ? 1 : 0) << "\n";
            }
        });
    }

    // ------------------------------------------------------------- chi
    auto* chi_cmd = app.add_subcommand("chi", "inaccessibility measures");
    chi_cmd->require_subcommand(1);
    {
        auto* eval = chi_cmd->add_subcommand("eval", "chi_c of a vector (c=2 admits quasi states)");
        auto q = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto c = std::make_shared<double>(2.0);
        eval->add_option("--q", *q, "vector");
        eval->add_option("--file", *file);
        eval->add_option("--c", *c, "order")->capture_default_str();
        eval->callback([q, file, c, &tol]() {
            const std::vector<double> v = state_from_options(*q, *file);
            JsonWriter w;
            w.begin_object();
            w.key("chi").value(*c == 2.0 ? chi(v) : chi_c(v, *c, tol));
            w.end_object();
            emit(w);
        });

        auto* recursive = chi_cmd->add_subcommand("recursive", "marginal-based recursion for integer c");
        auto rd = std::make_shared<int>(3);
        auto rq = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();
        auto rc = std::make_shared<int>(2);
        recursive->add_option("--d", *rd)->required();
        recursive->add_option("--q", *rq);
        recursive->add_option("--file", *rfile);
        recursive->add_option("--c", *rc)->capture_default_str();
        recursive->callback([rd, rq, rfile, rc, &tol]() {
            const MesModel m = MesModel::build(*rd);
            const QuasiState qv = state_from_options(*rq, *rfile);
            JsonWriter w;
            w.begin_object();
            w.key("chi").value(chi_c_recursive(m, qv, *rc, tol));
            w.end_object();
            emit(w);
        });

        auto* props = chi_cmd->add_subcommand("properties", "sampled property report");
        auto dims = std::make_shared<std::string>("2,3,4,6");
        auto trials = std::make_shared<int>(500);
        auto seed = std::make_shared<std::uint64_t>(1);
        props->add_option("--dims", *dims)->capture_default_str();
        props->add_option("--n", *trials, "trials")->capture_default_str();
        props->add_option("--seed", *seed)->capture_default_str();
        props->callback([dims, trials, seed, &exit_code]() {
            std::vector<int> dd;
            for (double v : parse_vector(*dims)) dd.push_back(static_cast<int>(v));
            const PropertyReport rep = property_report(dd, *trials, *seed);
            std::cout << rep.to_json() << "\n";
            if (!rep.all_pass()) exit_code = 1;
        });
    }

    // ------------------------------------------------------------- qp
    auto* qp = app.add_subcommand("qp", "quasi-probability valuations");
    qp->require_subcommand(1);
    {
        auto* val = qp->add_subcommand("value", "value of a statement");
        auto vq = std::make_shared<std::string>();
        auto vfile = std::make_shared<std::string>();
        auto s = std::make_shared<std::string>();
        val->add_option("--q", *vq);
        val->add_option("--file", *vfile);
        val->add_option("--s", *s, "statement as atom indices, e.g. \"0,2\"")->required();
        val->callback([vq, vfile, s]() {
            const QuasiState state = state_from_options(*vq, *vfile);
            const Valuation v(state, static_cast<int>(state.size()));
            JsonWriter w;
            w.begin_object();
            w.key("value").value(value(v, Statement::from_atoms(parse_atom_list(*s), v.dim)));
            w.end_object();
            emit(w);
        });

        auto* cond = qp->add_subcommand("conditional", "conditional value Q(y|x)");
        auto cq = std::make_shared<std::string>();
        auto cfile = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        cond->add_option("--q", *cq);
        cond->add_option("--file", *cfile);
        cond->add_option("--y", *y, "conditioned statement")->required();
        cond->add_option("--x", *x, "conditioning statement")->required();
        cond->callback([cq, cfile, y, x]() {
            const QuasiState state = state_from_options(*cq, *cfile);
            const Valuation v(state, static_cast<int>(state.size()));
            JsonWriter w;
            w.begin_object();
            w.key("value").value(conditional(v, Statement::from_atoms(parse_atom_list(*y), v.dim),
                                             Statement::from_atoms(parse_atom_list(*x), v.dim)));
            w.end_object();
            emit(w);
        });

        auto* rules = qp->add_subcommand("rules", "sum/product/Bayes spot check");
        auto rq = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();
        auto D = std::make_shared<int>(4);
        auto n = std::make_shared<int>(1000);
        auto seed = std::make_shared<std::uint64_t>(1);
        rules->add_option("--q", *rq, "state (default: random with the given seed)");
        rules->add_option("--file", *rfile);
        rules->add_option("--D", *D, "atom count for the random state")->capture_default_str();
        rules->add_option("--n", *n, "triples")->capture_default_str();
        rules->add_option("--seed", *seed)->capture_default_str();
        rules->callback([rq, rfile, D, n, seed, &exit_code]() {
            QuasiState state;
            if (!rq->empty() || !rfile->empty()) {
                state = state_from_options(*rq, *rfile);
            } else {
                Rng rng(*seed);
                state.resize(*D);
                double s = 0.0;
                for (double& v : state) {
                    v = rng.uniform(-1.0, 2.0);
                    s += v;
                }
                for (double& v : state) v += (1.0 - s) / *D;
            }
            const Valuation v(state, static_cast<int>(state.size()));
            const RuleReport rep = check_rules(v, *n, Rng::subseed(*seed, 1));
            JsonWriter w;
            w.begin_object();
            w.key("triples").value(rep.triples);
            w.key("sum_worst").value(rep.sum_worst);
            w.key("product_worst").value(rep.product_worst);
            w.key("bayes_worst").value(rep.bayes_worst);
            w.key("pass").value(rep.pass);
            w.end_object();
            emit(w);
            if (!rep.pass) exit_code = 1;
        });

        auto* ce = qp->add_subcommand("counterexample", "non-monotone combination family");
        auto cex = std::make_shared<std::string>("1/2");
        ce->add_option("--x", *cex, "parameter in [1-sqrt(3), 1+sqrt(3)]")->capture_default_str();
        ce->callback([cex, &tol]() {
            const GCounterexample g = g_counterexample(parse_scalar(*cex), tol);
            JsonWriter w;
            w.begin_object();
            w.key("q").value(g.q);
            w.key("qab_given_c").value(g.qab_given_c);
            w.key("qb_given_c").value(g.qb_given_c);
            w.key("qa_given_bc").value(g.qa_given_bc);
            w.end_object();
            emit(w);
        });
    }

    // ------------------------------------------------------------- qubit
    auto* qubit = app.add_subcommand("qubit", "density-matrix dictionary for d=2");
    qubit->require_subcommand(1);
    {
        auto rho_name = std::make_shared<std::string>();
        auto bloch = std::make_shared<std::string>();
        auto rfile = std::make_shared<std::string>();

        auto add_rho_options = [&](CLI::App* cmd) {
            cmd->add_option("--rho", *rho_name, "named state: identity/2, x+, x-, y+, y-, z+, z-");
            cmd->add_option("--bloch", *bloch, "Bloch vector \"x,y,z\"");
            cmd->add_option("--file", *rfile, "JSON file {re, im}");
        };

        auto* toq = qubit->add_subcommand("to-q", "frame coordinates of a density matrix");
        add_rho_options(toq);
        toq->callback([rho_name, bloch, rfile, &tol]() {
            const DensityMatrix rho = rho_from_options(*rho_name, *bloch, *rfile);
            JsonWriter w;
            w.begin_object();
            w.key("q").value(rho_to_q(rho, tol));
            w.end_object();
            emit(w);
        });

        auto* torho = qubit->add_subcommand("to-rho", "density matrix of a state");
        auto q = std::make_shared<std::string>();
        auto qfile = std::make_shared<std::string>();
        torho->add_option("--q", *q);
        torho->add_option("--file", *qfile);
        torho->callback([q, qfile, &tol]() {
            const QuasiState state = state_from_options(*q, *qfile);
            const DensityMatrix rho = q_to_rho(state, tol);
            JsonWriter w;
            w.begin_object();
            write_rho(w, rho);
            w.key("psd").value(is_positive_semidefinite(rho, tol));
            w.key("chi").value(chi(state));
            w.end_object();
            emit(w);
        });

        auto* pur = qubit->add_subcommand("purity", "chi_2 against 2/purity");
        add_rho_options(pur);
        pur->callback([rho_name, bloch, rfile, &tol]() {
            const PurityRelation rel = purity_relation(rho_from_options(*rho_name, *bloch, *rfile), tol);
            JsonWriter w;
            w.begin_object();
            w.key("chi2").value(rel.chi2);
            w.key("two_over_purity").value(rel.two_over_purity);
            w.end_object();
            emit(w);
        });

        auto* rt = qubit->add_subcommand("roundtrip", "state and density matrix side by side");
        auto n = std::make_shared<int>(10);
        auto seed = std::make_shared<std::uint64_t>(1);
        rt->add_option("--n", *n)->capture_default_str();
        rt->add_option("--seed", *seed)->capture_default_str();
        rt->callback([n, seed, &exit_code]() {
            JsonWriter w;
            w.begin_object();
            w.key("pairs").begin_array();
            double worst = 0.0;
            for (int i = 0; i < *n; ++i) {
                const DensityMatrix rho = random_density(Rng::subseed(*seed, i),
                                                         i % 2 ? PurityMode::Pure : PurityMode::Mixed);
                const QuasiState qv = rho_to_q(rho);
                const DensityMatrix back = q_to_rho(qv);
                const Mat2 diff = back - rho;
                worst = std::max({worst, std::abs(diff.a), std::abs(diff.b), std::abs(diff.c),
                                  std::abs(diff.d)});
                w.begin_object();
                w.key("q").value(qv);
                write_rho(w, rho);
                w.end_object();
            }
            w.end_array();
            w.key("worst_deviation").value(worst);
            const bool pass = worst <= 1e-12;
            w.key("pass").value(pass);
            w.end_object();
            emit(w);
            if (!pass) exit_code = 1;
        });
    }

    // ------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "lemma and example verification sweep");
    verify->require_subcommand(1);
    {
        auto* all = verify->add_subcommand("all", "run every check");
        auto max_d = std::make_shared<int>(8);
        auto seed = std::make_shared<std::uint64_t>(7);
        auto timings = std::make_shared<bool>(false);
        all->add_option("--max-d", *max_d, "largest atom count for the exhaustive sweeps (<= 12)")
            ->capture_default_str();
        all->add_option("--seed", *seed)->capture_default_str();
        all->add_flag("--timings", *timings, "include elapsed seconds (breaks byte-identical output)");
        all->callback([max_d, seed, timings, &exit_code]() {
            const auto reports = run_all(*max_d, *seed);
            std::cout << reports_to_json(reports, *timings) << "\n";
            if (!all_pass(reports)) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
