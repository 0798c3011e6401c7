#include "k3tau/serialize.hpp"

#include <limits>

#include "k3tau/discriminant.hpp"
#include "k3tau/k3_lattices.hpp"

namespace k3tau {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return to_string(n);
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

Json lattice_json(const Lattice& l) {
  return Json{{"rank", l.rank()}, {"gram", matrix_json(l.gram())}, {"labels", l.labels()}};
}

Lattice lattice_from_json(const Json& j) {
  Matrix gram = matrix_from_json(j.at("gram"));
  if (gram.rows() != j.at("rank").get<std::size_t>()) throw std::invalid_argument("rank does not match gram");
  return Lattice(gram, j.value("labels", std::vector<std::string>{}));
}

Json isometry_json(const Isometry& g) {
  Json out = lattice_json(g.domain());
  out["matrix"] = matrix_json(g.matrix());
  return out;
}

Isometry isometry_from_json(const Json& j) { return Isometry(lattice_from_json(j), matrix_from_json(j.at("matrix"))); }

Json mukai_json(const MukaiVector& v) {
  return Json{{"r", integer_json(v.r)}, {"c", integer_json(v.c)}, {"s", integer_json(v.s)},
              {"d", integer_json(v.d)}, {"text", to_string(v)}};
}

MukaiVector mukai_from_json(const Json& j) {
  return MukaiVector{integer_from_json(j.at("r")), integer_from_json(j.at("c")), integer_from_json(j.at("s")),
                     integer_from_json(j.at("d"))};
}

Json classification_json(const DClassification& c) {
  Json out{{"d", c.d},
           {"star", c.star},
           {"twostar", c.twostar},
           {"threestar", c.threestar.holds},
           {"tau_strict", c.tau_strict},
           {"tau_extended", c.tau_extended}};
  if (c.threestar.witness) {
    out["a"] = integer_json(c.threestar.witness->a);
    out["n"] = integer_json(c.threestar.witness->n);
  } else {
    out["a"] = nullptr;
    out["n"] = nullptr;
  }
  return out;
}

Json hilb_json(const HilbVerdict& v) {
  Json out{{"d", v.d}, {"n", v.n}, {"birational", v.birational}, {"scope", v.scope}};
  if (v.birational) {
    out["equation"] = v.equation;
    out["equation_text"] = equation_text(v.d, v.n, v.equation);
    out["p"] = integer_json(v.p);
    out["q"] = integer_json(v.q);
  } else {
    out["equation"] = nullptr;
    out["p"] = nullptr;
    out["q"] = nullptr;
  }
  return out;
}

Json pell_json(const PellWitness& w) {
  Json out{{"solvable", w.solvable}, {"method", w.method}};
  out["x"] = w.solvable ? integer_json(w.x) : Json(nullptr);
  out["y"] = w.solvable ? integer_json(w.y) : Json(nullptr);
  return out;
}

Json affine_json(const AffineWitness& w) {
  Json out{{"solvable", w.solvable}, {"method", w.method}};
  out["p"] = w.solvable ? integer_json(w.p) : Json(nullptr);
  out["q"] = w.solvable ? integer_json(w.q) : Json(nullptr);
  return out;
}

Json certificate_json(const TauCertificate& c) {
  Json out{{"d", c.d},
           {"u_matrix", matrix_json(c.u_matrix)},
           {"g_matrix", matrix_json(c.g_matrix)},
           {"glued", isometry_json(c.glued)},
           {"v", mukai_json(c.v)},
           {"L_tau", mukai_json(c.L_tau)},
           {"disc_multiplier", integer_json(c.disc_multiplier)},
           {"lambda_d_basis", matrix_json(c.lambda_d_basis)},
           {"lambda_d_action", matrix_json(c.lambda_d_action)},
           {"realization", c.realization}};
  if (c.eisenstein)
    out["eisenstein"] = Json::array({integer_json(c.eisenstein->first), integer_json(c.eisenstein->second)});
  else
    out["eisenstein"] = nullptr;
  return out;
}

std::vector<std::string> recheck_certificate(const Json& j) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  try {
    const std::int64_t d = j.at("d").get<std::int64_t>();
    const Integer dd = static_cast<long>(d);

    const Lattice ext = lattice_k3_extended();
    const Lattice glued_domain = lattice_from_json(j.at("glued"));
    const Matrix gt = matrix_from_json(j.at("glued").at("matrix"));
    const std::size_t n = ext.rank();
    expect(glued_domain == ext, "glued: domain is not the extended K3 lattice");
    expect(is_isometry(ext, gt), "glued: not an isometry");
    expect(gt * gt == Matrix::identity(n), "glued: square is not the identity");

    const Lattice t_lat = ell_plus_u4(dd);
    const Matrix u = matrix_from_json(j.at("u_matrix"));
    expect(is_isometry(t_lat, u), "u: not an isometry of Z ell_d + U4");
    expect(u * u == Matrix::identity(3), "u: square is not the identity");
    if (is_isometry(t_lat, u)) {
      const DiscMap du = induced_disc_map(t_lat, u);
      expect(du.multiplier && mod(*du.multiplier, dd) == mod(Integer(dd / 3 - 1), dd),
             "u: discriminant multiplier is not d/3 - 1");
    }

    const Matrix g = matrix_from_json(j.at("g_matrix"));
    const Lattice cub = lattice_cubic();
    expect(is_isometry(cub, g), "g: not an isometry of the cubic lattice");
    expect(g * g == Matrix::identity(cub.rank()), "g: square is not the identity");

    // g~ restricts to u on (e4, ell_d, f4) and to the recorded action on Lambda_d
    const Matrix t = columns({ext.unit("e4"), ell_d(ext, dd), ext.unit("f4")});
    expect(gt * t == t * u, "glued: does not restrict to u");
    const Matrix nb = matrix_from_json(j.at("lambda_d_basis"));
    const Matrix na = matrix_from_json(j.at("lambda_d_action"));
    expect(gt * nb == nb * na, "glued: does not restrict to the recorded action on Lambda_d");
    for (std::size_t c = 0; c < nb.cols(); ++c)
      expect(pairing(ext, nb.col(c), ell_d(ext, dd)) == 0 && pairing(ext, nb.col(c), ext.unit("e4")) == 0 &&
                 pairing(ext, nb.col(c), ext.unit("f4")) == 0,
             "lambda_d_basis: column " + std::to_string(c) + " is not orthogonal to Z ell_d + U4");

    const MukaiVector v = mukai_from_json(j.at("v"));
    const MukaiVector lt = mukai_from_json(j.at("L_tau"));
    expect(mukai_from_extended(gt * ext.unit("f4"), dd) == v, "v: not the image of f4");
    expect(v.self_pairing() == 0, "v: (v, v) != 0");
    expect(v.primitive(), "v: not primitive");
    expect(mukai_pairing(v, lt) == 0, "L_tau: (v, L_tau) != 0");
    expect(lt.self_pairing() == dd, "L_tau: (L_tau, L_tau) != d");
    expect(mod(integer_from_json(j.at("disc_multiplier")), dd) == mod(Integer(dd / 3 - 1), dd),
           "disc_multiplier != d/3 - 1");
  } catch (const std::exception& e) {
    failures.push_back(std::string("malformed certificate: ") + e.what());
  }
  return failures;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace k3tau
