#pragma once

#include <symprod/class_function.hpp>
#include <symprod/free_algebra.hpp>
#include <symprod/gen_series.hpp>
#include <symprod/graded_class.hpp>
#include <symprod/oracle.hpp>
#include <symprod/series.hpp>

#include <json.hpp>

#include <string>

namespace symprod {

// Keys follow insertion order (nlohmann::ordered_json) and every container
// iterates a std::map with a documented total order, so serialized bytes are
// reproducible across runs and thread counts. All numbers are exact strings.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

json rational_to_json(const Rational& q);                 // "num/den"
Rational rational_from_json(const json& j);

json laurent_to_json(const LaurentY& f);                  // {"exponent": "rational"}
LaurentY laurent_from_json(const json& j);                // map, or expression string

json partition_to_json(const Partition& lambda);          // [3,2,1]
Partition partition_from_json(const json& j);

json permutation_to_json(const Permutation& sigma);       // {"n": ..., "cycles": "..."}
Permutation permutation_from_json(const json& j);

json class_function_to_json(const ClassFunction& f);      // {"n":., "values":{"[...]": scalar}}
ClassFunction class_function_from_json(const json& j);

json symfunc_to_json(const SymFunc& f);                   // {"[2,1]": "rational"}
json ysymfunc_to_json(const YSymFunc& f);                 // {"[2,1]": scalar}

// Scalar shorthand: a y-free Laurent value serializes as its rational
// string, otherwise as the exponent map.
json laurent_scalar_to_json(const LaurentY& f);
LaurentY laurent_scalar_from_json(const json& j);

json graded_class_to_json(const GradedClass& c);
GradedClass graded_class_from_json(const json& j);

json generator_to_json(const Generator& g);               // {"family","r","label"}
json monomial_to_json(const Monomial& m);
json element_to_json(const FreeAlgElement& x);            // {monomial-key: coefficient}

json bigraded_to_json(const oracle::BigradedSpace& w);    // {"i,p": dim}
oracle::BigradedSpace bigraded_from_json(const json& j);

json series_to_json(const TruncSeries<LaurentY>& s);
json series_to_json(const TruncSeries<Rational>& s);
json series_to_json(const TruncSeries<FreeAlgElement>& s);

}  // namespace symprod
