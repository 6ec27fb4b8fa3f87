#pragma once

#include <json.hpp>

#include <string>

#include "mdh/bdiagram.hpp"
#include "mdh/eggers.hpp"
#include "mdh/intmatrix.hpp"
#include "mdh/puiseux.hpp"
#include "mdh/simplicial.hpp"

namespace mdh {

using Json = nlohmann::json;

// Integers ride as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; readers accept both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

// [num, den]
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

// [num, den] or "inf"
Json extrat_to_json(const ExtRat& e);
ExtRat extrat_from_json(const Json& j);

// {"re":[p,q],"im":[p,q]}
Json gauss_to_json(const GaussRat& g);
GaussRat gauss_from_json(const Json& j);

// {"branches":[{"id":"C1","terms":[{"exp":[3,2],"coeff":{...}}]}]}
// Readers also accept {"id":"C1","series":"x^(3/2)"}; the term-array form
// is what gets written. The parsed curve is validated.
Json curve_to_json(const Curve& c);
Curve curve_from_json(const Json& j);

// {"nodes":[{"id":0,"height":[0,1]}],"edges":[{"from":0,"to":1,"weight":1}],
//  "leaves":{"1":"C1"}}
Json tree_to_json(const EggersWallTree& t);

// Parses and validates; node ids are renumbered to the canonical preorder,
// so canonical exports round-trip byte-for-byte and any valid tree
// round-trips up to renumbering.
EggersWallTree tree_from_json(const Json& j);

// Array of rows. A matrix with zero rows flattens to []; its column count
// comes back from the rank data, which is why readers take the dimensions.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, int rows, int cols);

// One degree: {"degree":1,"breakpoints":[[1,1],[3,2]],"ranks":[0,1,1],
// "steps":[[],[[2]]]}. Step dimensions are recovered from the ranks.
Json diagram_to_json(const BDiagram& d);
BDiagram diagram_from_json(const Json& j);

// {"deg0":{...,"inf_basis":[...],"one_basis":[...]},"deg1":{...}}; each
// degree object carries the shared basis labels.
Json framed_to_json(const FramedDiagram& f);
FramedDiagram framed_from_json(const Json& j);

// {"simplices":[[0,1],[1,2],[0,2]],"sub":[[0]]}. The writer emits the full
// face-closed lists; the reader accepts any generating set and closes it.
Json complex_to_json(const SimplicialPair& p);
SimplicialPair complex_from_json(const Json& j);

// Filesystem helpers with uniform error reporting.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json parse_json_text(const std::string& text, const std::string& what);
Json load_json_file(const std::string& path);

} // namespace mdh
