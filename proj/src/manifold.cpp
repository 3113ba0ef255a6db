#include "csrec/manifold.hpp"

#include <json.hpp>

#include <fstream>

namespace csrec {
namespace {

using nlohmann::json;

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex complex_from_json(const json& j, mpfr_prec_t prec) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw schema_error("complex entries must be [\"re\", \"im\"] decimal strings");
    return Complex(Real::from_string(j[0].get<std::string>(), prec),
                   Real::from_string(j[1].get<std::string>(), prec));
}

json complex_to_json(const Complex& z, int digits) {
    return json::array({z.re().str(digits), z.im().str(digits)});
}

SL2 matrix_from_json(const json& j, mpfr_prec_t prec) {
    if (!j.is_array() || j.size() != 4) throw schema_error("matrix must have 4 entries");
    SL2 m(complex_from_json(j[0], prec), complex_from_json(j[1], prec),
          complex_from_json(j[2], prec), complex_from_json(j[3], prec));
    Real dev = abs(m.det() - make_one(prec));
    if (dev > Real(1e-10, prec)) throw schema_error("matrix determinant differs from 1");
    return m;
}

json matrix_to_json(const SL2& m, int digits) {
    return json::array({complex_to_json(m.a, digits), complex_to_json(m.b, digits),
                        complex_to_json(m.c, digits), complex_to_json(m.d, digits)});
}

Word word_from_json(const json& j) {
    Word w;
    for (const auto& v : j) w.push_back(v.get<int>());
    return reduced(std::move(w));
}

}  // namespace

ManifoldInput load_manifold(const std::string& path, mpfr_prec_t prec) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open manifold file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw schema_error(std::string("manifold JSON parse error: ") + e.what());
    }
    ManifoldInput m;
    m.name = j.value("name", "");
    m.cell.pres.generators = j.at("generators").get<int>();
    for (const auto& r : j.at("relators")) m.cell.pres.relators.push_back(word_from_json(r));
    if (j.contains("d3")) {
        for (const auto& entry : j.at("d3")) {
            GroupRing g;
            for (const auto& t : entry)
                g.push_back({t.at("coeff").get<long>(), word_from_json(t.at("word"))});
            m.cell.d3.push_back(std::move(g));
        }
        if (m.cell.d3.size() != m.cell.pres.relators.size())
            throw schema_error("d3 must have one group-ring entry per relator");
    }
    if (j.contains("representations")) {
        for (const auto& r : j.at("representations")) {
            ManifoldInput::Rep rep;
            rep.id = r.at("id").get<std::string>();
            for (const auto& mat : r.at("matrices")) rep.rho.push_back(matrix_from_json(mat, prec));
            if (static_cast<int>(rep.rho.size()) != m.cell.pres.generators)
                throw schema_error("representation must assign one matrix per generator");
            m.representations.push_back(std::move(rep));
        }
    }
    if (j.contains("v0")) m.v0 = matrix_from_json(j.at("v0"), prec);
    m.surgery_p = j.value("surgery_p", 0L);
    m.surgery_q = j.value("surgery_q", 0L);
    return m;
}

void save_manifold(const ManifoldInput& m, const std::string& path, int digits) {
    json j;
    j["name"] = m.name;
    j["generators"] = m.cell.pres.generators;
    j["relators"] = json::array();
    for (const auto& r : m.cell.pres.relators) j["relators"].push_back(r);
    if (!m.cell.d3.empty()) {
        json d3 = json::array();
        for (const auto& g : m.cell.d3) {
            json entry = json::array();
            for (const auto& t : g) entry.push_back({{"coeff", t.coeff}, {"word", t.word}});
            d3.push_back(entry);
        }
        j["d3"] = d3;
    }
    json reps = json::array();
    for (const auto& rep : m.representations) {
        json mats = json::array();
        for (const auto& mat : rep.rho) mats.push_back(matrix_to_json(mat, digits));
        reps.push_back({{"id", rep.id}, {"matrices", mats}});
    }
    j["representations"] = reps;
    if (m.v0) j["v0"] = matrix_to_json(*m.v0, digits);
    if (m.surgery_p != 0) {
        j["surgery_p"] = m.surgery_p;
        j["surgery_q"] = m.surgery_q;
    }
    std::ofstream out(path);
    out << j.dump(1) << "\n";
}

}  // namespace csrec
