#include "holotor/linkspec.hpp"

#include <json.hpp>

namespace holotor {

namespace {

using json = nlohmann::ordered_json;

cplx read_cplx(const json& j, const std::string& where) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw parse_error(where + ": expected a number or [re, im]");
}

json write_cplx(const cplx& z) { return json::array({z.real(), z.imag()}); }

Matrix read_matrix2(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw parse_error(where + ": expected a 2x2 matrix");
    Matrix m(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2)
            throw parse_error(where + ": expected a 2x2 matrix");
        for (std::size_t c = 0; c < 2; ++c) m(r, c) = read_cplx(j[r][c], where);
    }
    return m;
}

}  // namespace

std::vector<SL2Elem> LinkSpec::sl2_colors() const {
    if (!colors.empty()) return colors;
    return defactorize_tuple(star_colors);
}

LinkSpec parse_linkspec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("link spec must be a JSON object");
    LinkSpec spec;
    try {
        if (!j.contains("strands") || !j["strands"].is_number_integer())
            throw parse_error("missing integer field 'strands'");
        spec.strands = j["strands"].get<int>();
        if (spec.strands < 1) throw parse_error("'strands' must be >= 1");
        if (!j.contains("word") || !j["word"].is_array())
            throw parse_error("missing array field 'word'");
        for (const auto& l : j["word"]) {
            if (!l.is_number_integer()) throw parse_error("'word' entries must be integers");
            spec.word.push_back(l.get<int>());
        }
        BraidWord(spec.strands, spec.word);  // validates letter range
        if (j.contains("name")) spec.name = j["name"].get<std::string>();

        const bool has_sl2 = j.contains("colors"), has_star = j.contains("star_colors");
        if (has_sl2 == has_star)
            throw parse_error("exactly one of 'colors' or 'star_colors' is required");
        if (has_sl2) {
            for (std::size_t i = 0; i < j["colors"].size(); ++i)
                spec.colors.emplace_back(
                    read_matrix2(j["colors"][i], "colors[" + std::to_string(i) + "]"));
            if (static_cast<int>(spec.colors.size()) != spec.strands)
                throw parse_error("'colors' length must equal 'strands'");
        } else {
            for (std::size_t i = 0; i < j["star_colors"].size(); ++i) {
                const auto& c = j["star_colors"][i];
                const std::string where = "star_colors[" + std::to_string(i) + "]";
                if (!c.is_object() || !c.contains("kappa"))
                    throw parse_error(where + ": expected {kappa, epsilon, phi}");
                spec.star_colors.emplace_back(
                    read_cplx(c["kappa"], where),
                    c.contains("epsilon") ? read_cplx(c["epsilon"], where) : cplx(0.0),
                    c.contains("phi") ? read_cplx(c["phi"], where) : cplx(0.0));
            }
            if (static_cast<int>(spec.star_colors.size()) != spec.strands)
                throw parse_error("'star_colors' length must equal 'strands'");
        }
        if (j.contains("mu"))
            for (const auto& m : j["mu"]) spec.mu.push_back(read_cplx(m, "mu"));
        if (j.contains("options")) {
            const auto& o = j["options"];
            if (o.contains("tol")) spec.tol = o["tol"].get<double>();
            if (o.contains("seed")) spec.seed = o["seed"].get<unsigned long>();
            if (o.contains("gauge")) {
                const std::string g = o["gauge"].get<std::string>();
                if (g != "auto" && g != "off") throw parse_error("options.gauge: auto|off");
                spec.gauge_auto = (g == "auto");
            }
            if (o.contains("stabilize")) {
                const std::string s = o["stabilize"].get<std::string>();
                if (s != "auto" && s != "off") throw parse_error("options.stabilize: auto|off");
                spec.stabilize_auto = (s == "auto");
            }
        }
    } catch (const parse_error&) {
        throw;
    } catch (const dim_error& e) {
        throw parse_error(e.what());
    } catch (const math_error& e) {
        throw parse_error(e.what());
    } catch (const std::exception& e) {
        throw parse_error(std::string("malformed link spec: ") + e.what());
    }
    return spec;
}

std::string emit_linkspec(const LinkSpec& spec, bool pretty) {
    json j;
    if (spec.name) j["name"] = *spec.name;
    j["strands"] = spec.strands;
    j["word"] = spec.word;
    if (!spec.colors.empty()) {
        json cols = json::array();
        for (const auto& g : spec.colors) {
            json m = json::array();
            for (std::size_t r = 0; r < 2; ++r)
                m.push_back(json::array({write_cplx(g.m(r, 0)), write_cplx(g.m(r, 1))}));
            cols.push_back(m);
        }
        j["colors"] = cols;
    } else {
        json cols = json::array();
        for (const auto& c : spec.star_colors)
            cols.push_back(json{{"kappa", write_cplx(c.kappa)},
                                {"epsilon", write_cplx(c.epsilon)},
                                {"phi", write_cplx(c.phi)}});
        j["star_colors"] = cols;
    }
    if (!spec.mu.empty()) {
        json mus = json::array();
        for (const auto& m : spec.mu) mus.push_back(write_cplx(m));
        j["mu"] = mus;
    }
    j["options"] = json{{"tol", spec.tol},
                        {"seed", spec.seed},
                        {"gauge", spec.gauge_auto ? "auto" : "off"},
                        {"stabilize", spec.stabilize_auto ? "auto" : "off"}};
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace holotor
