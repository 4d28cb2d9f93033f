#pragma once

#include <string>

#include <json.hpp>

#include <qcft/mock_modular.hpp>
#include <qcft/partitions.hpp>
#include <qcft/rational.hpp>
#include <qcft/regularization.hpp>
#include <qcft/series.hpp>
#include <qcft/virasoro.hpp>

namespace qcft {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational &r);
Json to_json(const FracQSeries &f);
Json to_json(const CountTable &t);
Json to_json(const RegularizedValue &v);
Json to_json(const VermaGram &g);
Json to_json(const MockCoefficients &m);

FracQSeries series_from_json(const Json &j);

// Two-space indent plus trailing newline.
std::string dump_stable(const Json &j);

} // namespace qcft
