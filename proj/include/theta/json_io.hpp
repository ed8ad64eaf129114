#pragma once

#include "json.hpp"

#include "theta/gamma.hpp"
#include "theta/ngraph.hpp"
#include "theta/simplex.hpp"
#include "theta/theta_operator.hpp"

namespace theta {

using Json = nlohmann::json;

/// {"cells": [[id,...],...], "source": [[id,...],...], "target": [...]}; source/target name cells by id.
Json to_json(const NGraph& g);

/// {"src": m, "tgt": n, "values": [...]}
Json to_json(const SimplicialOperator& f);
SimplicialOperator simplicial_from_json(const Json& j);

/// {"src": m, "tgt": n, "subsets": [[...],...]}
Json to_json(const GammaOperator& u);
GammaOperator gamma_from_json(const Json& j);

/// {"level": n, "src": tree, "tgt": tree, "phi": [...], "components": [[op,...],...]}
Json to_json(const ThetaOperator& f);
ThetaOperator theta_from_json(const Json& j);

}  // namespace theta
