#include "levylab/config.hpp"

#include "levylab/errors.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <set>

namespace levylab {

namespace pt = boost::property_tree;

namespace {

double to_double(const std::string& key, const std::string& raw) {
    const std::string text = boost::trim_copy(raw);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InvalidInput(fmt::format("{}: '{}' is not a number", key, text));
    }
    if (used != text.size()) {
        throw InvalidInput(fmt::format("{}: trailing characters in '{}'", key, text));
    }
    if (!std::isfinite(v)) throw InvalidInput(fmt::format("{}: value must be finite", key));
    return v;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
    std::vector<std::string> parts;
    boost::split(parts, text, boost::is_any_of(","));
    std::vector<double> out;
    for (auto& p : parts) {
        boost::trim(p);
        if (!p.empty()) out.push_back(to_double(key, p));
    }
    if (out.empty()) throw InvalidInput(fmt::format("{}: empty list", key));
    return out;
}

class Section {
public:
    Section(const pt::ptree& root, std::string name, std::set<std::string> allowed)
        : name_(std::move(name)) {
        if (auto child = root.get_child_optional(name_)) node_ = *child;
        for (const auto& kv : node_) {
            if (!allowed.count(kv.first)) {
                throw InvalidInput(fmt::format("[{}]: unknown key '{}'", name_, kv.first));
            }
        }
    }

    std::optional<std::string> text(const std::string& key) const {
        if (auto v = node_.get_optional<std::string>(pt::ptree::path_type(key, '\0'))) {
            return boost::trim_copy(*v);
        }
        return std::nullopt;
    }

    std::optional<double> opt(const std::string& key) const {
        if (auto t = text(key)) return to_double(label(key), *t);
        return std::nullopt;
    }

    double num(const std::string& key, double fallback) const { return opt(key).value_or(fallback); }

    double req(const std::string& key) const {
        if (auto v = opt(key)) return *v;
        throw InvalidInput(fmt::format("[{}]: missing key '{}'", name_, key));
    }

    int integer(const std::string& key, int fallback) const {
        const double v = num(key, fallback);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw InvalidInput(fmt::format("{}: expected an integer", label(key)));
        }
        return static_cast<int>(v);
    }

    std::string label(const std::string& key) const { return fmt::format("[{}] {}", name_, key); }

private:
    std::string name_;
    pt::ptree node_;
};

LevyModel build_model(const Section& s) {
    const std::string kind = boost::to_lower_copy(s.text("kind").value_or("bs"));
    const double r = s.req("r");
    const double delta = s.num("delta", 0.0);
    const double sigma = s.num("sigma", 0.0);
    LevyMeasureSpec spec;
    if (auto a = s.text("atoms")) spec.atoms = parse_atoms(*a);

    if (kind == "bs") {
        spec.law = jumps::None{};
    } else if (kind == "kou") {
        spec.law = jumps::Kou{s.num("lambda_up", 0.0), s.num("eta_up", 0.0),
                              s.num("lambda_down", 0.0), s.num("eta_down", 0.0)};
    } else if (kind == "merton") {
        spec.law = jumps::Merton{s.req("intensity"), s.num("mean", 0.0), s.req("stdev")};
    } else if (kind == "vg") {
        spec.law = jumps::VarianceGamma{s.req("c"), s.req("g"), s.req("m")};
    } else if (kind == "cgmy") {
        const double y = s.req("y");
        const double c = s.req("c");
        spec.law = jumps::TemperedStable{s.num("c_pos", c), s.num("c_neg", c), s.req("g"),
                                         s.req("m"), y, y};
    } else if (kind == "ts") {
        spec.law = jumps::TemperedStable{s.num("c_pos", 0.0), s.num("c_neg", 0.0), s.req("g"),
                                         s.req("m"), s.num("alpha_pos", 0.5),
                                         s.num("alpha_neg", 0.5)};
    } else if (kind == "finite") {
        const auto sizes = s.text("sizes");
        if (!sizes) throw InvalidInput("[model] finite needs 'sizes'");
        spec.law = jumps::FiniteActivity{s.req("intensity"), parse_atoms(*sizes)};
    } else {
        throw InvalidInput(fmt::format("[model] unknown kind '{}'", kind));
    }
    return LevyModel(r, delta, sigma, spec);
}

}  // namespace

std::vector<Atom> parse_atoms(const std::string& text) {
    std::vector<std::string> items;
    boost::split(items, text, boost::is_any_of(","));
    std::vector<Atom> out;
    for (auto& item : items) {
        boost::trim(item);
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw InvalidInput(fmt::format("atom '{}' must read location:weight", item));
        }
        out.push_back({to_double("atom location", item.substr(0, colon)),
                       to_double("atom weight", item.substr(colon + 1))});
    }
    return out;
}

Config parse_config(std::istream& in) {
    pt::ptree root;
    try {
        pt::read_ini(in, root);
    } catch (const pt::ini_parser_error& e) {
        throw InvalidInput(fmt::format("config: {}", e.message()));
    }
    for (const auto& kv : root) {
        if (kv.first != "model" && kv.first != "option" && kv.first != "grid" &&
            kv.first != "experiment") {
            throw InvalidInput(fmt::format("config: unknown section or top-level key '{}'",
                                           kv.first));
        }
    }
    if (!root.get_child_optional("model")) throw InvalidInput("config: missing [model]");

    const Section model(root, "model",
                        {"kind", "r", "delta", "sigma", "atoms", "lambda_up", "eta_up",
                         "lambda_down", "eta_down", "intensity", "mean", "stdev", "c", "g", "m",
                         "y", "c_pos", "c_neg", "alpha_pos", "alpha_neg", "sizes"});
    const Section option(root, "option", {"strike", "spot", "maturity"});
    const Section grid(root, "grid",
                       {"n_x", "n_t", "width", "x_min", "x_max", "near_n_t", "points_per_scale",
                        "lcp", "scheme"});
    const Section exp(root, "experiment",
                      {"theta_max", "theta_min", "n_theta", "tolerance", "expect_rate", "y_star",
                       "growth", "stopping_dx", "expansion_thetas", "expansion_multiples",
                       "mc_paths"});

    Config c{build_model(model), {}, {}, {}};
    c.option.strike = option.num("strike", 100.0);
    c.option.spot = option.num("spot", c.option.strike);
    c.option.maturity = option.num("maturity", 1.0);
    if (!(c.option.strike > 0.0)) throw InvalidInput("[option] strike must be > 0");
    if (!(c.option.spot > 0.0)) throw InvalidInput("[option] spot must be > 0");

    c.grid.n_x = grid.integer("n_x", c.grid.n_x);
    c.grid.n_t = grid.integer("n_t", c.grid.n_t);
    c.grid.width = grid.num("width", c.grid.width);
    c.grid.x_min = grid.opt("x_min");
    c.grid.x_max = grid.opt("x_max");
    c.grid.near_n_t = grid.integer("near_n_t", c.grid.near_n_t);
    c.grid.points_per_scale = grid.num("points_per_scale", c.grid.points_per_scale);
    if (auto l = grid.text("lcp")) {
        const std::string v = boost::to_lower_copy(*l);
        if (v == "brennan_schwartz" || v == "bs") {
            c.grid.lcp = LcpMethod::BrennanSchwartz;
        } else if (v == "psor") {
            c.grid.lcp = LcpMethod::Psor;
        } else {
            throw InvalidInput(fmt::format("[grid] lcp '{}' is not brennan_schwartz or psor", *l));
        }
    }
    if (auto t = grid.text("scheme")) {
        const std::string v = boost::to_lower_copy(*t);
        if (v == "bdf2") {
            c.grid.scheme = TimeScheme::Bdf2;
        } else if (v == "euler") {
            c.grid.scheme = TimeScheme::ImplicitEuler;
        } else {
            throw InvalidInput(fmt::format("[grid] scheme '{}' is not bdf2 or euler", *t));
        }
    }

    auto& e = c.experiment;
    e.theta_max = exp.num("theta_max", e.theta_max);
    e.theta_min = exp.num("theta_min", e.theta_min);
    e.n_theta = exp.integer("n_theta", e.n_theta);
    e.tolerance = exp.opt("tolerance");
    e.expect_rate = exp.text("expect_rate");
    e.y_star = exp.opt("y_star");
    if (auto g = exp.text("growth")) {
        const std::string v = boost::to_lower_copy(*g);
        if (v == "growing") {
            e.growth = PhaseOneGrowth::Growing;
        } else if (v == "discounted") {
            e.growth = PhaseOneGrowth::Discounted;
        } else {
            throw InvalidInput(fmt::format("[experiment] growth '{}' is not growing or discounted", *g));
        }
    }
    e.stopping_dx = exp.num("stopping_dx", e.stopping_dx);
    if (auto t = exp.text("expansion_thetas")) e.expansion_thetas = to_list("expansion_thetas", *t);
    if (auto t = exp.text("expansion_multiples")) {
        e.expansion_multiples = to_list("expansion_multiples", *t);
    }
    e.mc_paths = exp.integer("mc_paths", e.mc_paths);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(fmt::format("cannot open config '{}'", path));
    return parse_config(in);
}

Grid full_grid(const GridConfig& g, double strike, double maturity) {
    Grid out;
    const double lk = std::log(strike);
    out.x_min = g.x_min.value_or(lk - g.width);
    out.x_max = g.x_max.value_or(lk + g.width);
    out.n_x = g.n_x;
    out.T = maturity;
    out.n_t = g.n_t;
    return out;
}

}  // namespace levylab
