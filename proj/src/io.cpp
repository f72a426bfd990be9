#include "axial/io.hpp"

namespace axial {

Json algebra_to_json(const Algebra& alg) {
  Json j;
  j["labels"] = alg.labels();
  Json sc = Json::array();
  for (Index i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < alg.dim(); ++k) {
      Json cell = Json::array();
      const Element& p = alg.basis_product(i, k);
      for (Index l = 0; l < alg.dim(); ++l) cell.push_back(to_string(p[l]));
      row.push_back(std::move(cell));
    }
    sc.push_back(std::move(row));
  }
  j["sc"] = std::move(sc);
  return j;
}

Algebra algebra_from_json(const Json& j) {
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const Index n = static_cast<Index>(labels.size());
  const Json& sc = j.at("sc");
  if (static_cast<Index>(sc.size()) != n) throw AlgebraError("sc tensor shape");
  Algebra alg = Algebra::zero_algebra(labels);
  std::vector<std::vector<Element>> raw(n, std::vector<Element>(n));
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(sc[i].size()) != n) throw AlgebraError("sc tensor shape");
    for (Index k = 0; k < n; ++k) {
      const Json& cell = sc[i][k];
      if (static_cast<Index>(cell.size()) != n) throw AlgebraError("sc tensor shape");
      Element v(n);
      for (Index l = 0; l < n; ++l) v[l] = parse_scalar(cell[l].get<std::string>());
      raw[i][k] = std::move(v);
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (!vec_equal(raw[i][k], raw[k][i]))
        throw AlgebraError("loaded structure constants are not commutative");
  for (Index i = 0; i < n; ++i)
    for (Index k = i; k < n; ++k) alg.set_product(i, k, raw[i][k]);
  return alg;
}

Json gram_to_json(const Mat<Scalar>& g) {
  Json rows = Json::array();
  for (Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < g.cols(); ++j) row.push_back(to_string(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json element_to_json(const Element& e) {
  Json out = Json::array();
  for (Index i = 0; i < e.size(); ++i) out.push_back(to_string(e[i]));
  return out;
}

Element element_from_json(const Json& j) {
  Element e(static_cast<Index>(j.size()));
  for (Index i = 0; i < e.size(); ++i) e[i] = parse_scalar(j[i].get<std::string>());
  return e;
}

Json params_to_json(const ParameterTuple& p) {
  Json j;
  j["alpha"] = to_string(p.alpha);
  j["beta"] = to_string(p.beta);
  j["gamma"] = to_string(p.gamma);
  j["psi"] = to_string(p.psi);
  return j;
}

ParameterTuple params_from_json(const Json& j) {
  return ParameterTuple{parse_scalar(j.at("alpha").get<std::string>()),
                        parse_scalar(j.at("beta").get<std::string>()),
                        parse_scalar(j.at("gamma").get<std::string>()),
                        parse_scalar(j.at("psi").get<std::string>())};
}

Json model_to_json(const ModelAlgebra& m) {
  Json j = algebra_to_json(m.algebra);
  j["provenance"] = to_string(m.provenance);
  if (m.params) j["params"] = params_to_json(*m.params);
  if (m.branch) j["branch"] = to_string(*m.branch);
  Json gens;
  for (std::size_t i = 0; i < m.axes.size(); ++i) {
    std::string name = i < m.axis_names.size() ? m.axis_names[i] : "g" + std::to_string(i);
    gens[name] = element_to_json(m.axes[i]);
  }
  j["generators"] = std::move(gens);
  if (m.trace_gram) j["gram"] = gram_to_json(*m.trace_gram);
  if (!m.notes.empty()) j["notes"] = m.notes;
  return j;
}

Json row_match_to_json(const ParameterTuple& p, const RowMatch& m) {
  Json j;
  Json rows = Json::array();
  for (Row r : m.rows) rows.push_back(to_string(r));
  j["rows"] = std::move(rows);
  j["iso"] = to_string(m.iso);
  j["quotient_dim"] = m.quotient_dim;
  j["generic"] = m.generic;
  if (m.permutation) j["permutation"] = *m.permutation;
  j["params"] = params_to_json(p);
  return j;
}

Json row_verification_to_json(const RowVerification& v) {
  Json j;
  j["row"] = to_string(v.row);
  j["params"] = params_to_json(v.params);
  j["rows"] = Json::array({to_string(v.row)});
  j["iso_class"] = to_string(v.iso);
  j["iso"] = to_string(v.iso);
  j["quotient_dim"] = v.expected_dim;
  j["model_dim"] = static_cast<int>(v.model_dim);
  j["dim_ok"] = v.dim_ok;
  j["params_reproduced"] = v.params_reproduced;
  j["radical_dim"] = static_cast<int>(v.radical_dim);
  Json res = Json::array();
  for (const auto& r : v.residuals) {
    Json e;
    e["expression"] = r.name;
    e["residual"] = element_to_json(r.residual);
    e["zero"] = r.zero;
    res.push_back(std::move(e));
  }
  j["expression_residuals"] = std::move(res);
  j["table_diffs"] = Json::array();
  if (!v.notes.empty()) j["notes"] = v.notes;
  j["ok"] = v.ok();
  return j;
}

Json table_report_to_json(const TableReport& r) {
  Json j;
  j["table"] = r.table == TableId::S7 ? "S7" : "S8";
  j["params"] = params_to_json(r.params);
  Json diffs = Json::array();
  for (const auto& c : r.cells) {
    Json d;
    d["cell"] = c.row_label + " * " + c.col_label;
    d["printed"] = c.printed;
    d["recomputed"] = c.recomputed;
    d["match"] = c.match;
    if (c.known_suspect) d["known_suspect"] = true;
    diffs.push_back(std::move(d));
  }
  j["table_diffs"] = std::move(diffs);
  j["mismatches"] = r.mismatches(true);
  j["unexpected_mismatches"] = r.mismatches(false);
  return j;
}

Json generic_verification_to_json(const GenericVerification& v) {
  Json j;
  j["params"] = params_to_json(v.params);
  j["rows"] = Json::array();
  j["iso"] = to_string(IsoClass::M3plus);
  j["quotient_dim"] = 9;
  j["closure_dim"] = static_cast<int>(v.closure_dim);
  j["radical_dim"] = static_cast<int>(v.radical_dim);
  j["params_reproduced"] = v.params_reproduced;
  j["ok"] = v.ok();
  return j;
}

}  // namespace axial
