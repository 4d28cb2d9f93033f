#include <qcft/serialize.hpp>

#include <qcft/errors.hpp>
#include <qcft/numeric.hpp>

namespace qcft {

Json to_json(const Rational &r)
{
    return r.to_string();
}

Json to_json(const FracQSeries &f)
{
    Json coeffs = Json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    Json j;
    j["prefactor"] = f.prefactor().to_string();
    j["order"] = f.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const CountTable &t)
{
    Json out = Json::array();
    for (const auto &v : t.values) {
        out.push_back(v.get_str());
    }
    return out;
}

Json to_json(const RegularizedValue &v)
{
    Json j;
    j["value"] = v.value.to_string();
    j["method"] = to_string(v.method);
    return j;
}

Json to_json(const VermaGram &g)
{
    Json basis = Json::array();
    for (const auto &m : g.basis) {
        basis.push_back(m);
    }
    Json entries = Json::array();
    for (const auto &row : g.entries) {
        Json r = Json::array();
        for (const auto &e : row) {
            r.push_back(e.to_string());
        }
        entries.push_back(std::move(r));
    }
    Json j;
    j["level"] = g.level;
    j["vacuum"] = g.vacuum;
    j["basis"] = std::move(basis);
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const MockCoefficients &m)
{
    Json j;
    j["scale"] = m.scale.to_string();
    j["values"] = m.values;
    j["y0"] = format_short(m.y0);
    j["grid"] = m.grid;
    j["max_z_deviation"] = format_decimal(m.max_z_deviation);
    return j;
}

FracQSeries series_from_json(const Json &j)
{
    try {
        const auto prefactor = Rational::parse(j.at("prefactor").get<std::string>());
        const auto order = j.at("order").get<std::size_t>();
        const auto &coeffs = j.at("coeffs");
        if (coeffs.size() != order) {
            throw ParseError("series record: order " + std::to_string(order) + " but "
                             + std::to_string(coeffs.size()) + " coefficients");
        }
        std::vector<Rational> c;
        c.reserve(order);
        for (const auto &v : coeffs) {
            c.push_back(Rational::parse(v.get<std::string>()));
        }
        return {prefactor, std::move(c)};
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("series record: ") + e.what());
    }
}

std::string dump_stable(const Json &j)
{
    return j.dump(2) + "\n";
}

} // namespace qcft
