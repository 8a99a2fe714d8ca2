#include "hgman/lie.hpp"

#include <string>

#include "hgman/errors.hpp"

namespace hgman {

namespace {

const std::vector<Variance> kBracketVar{Variance::down, Variance::down, Variance::up};

void check_bracket_shape(const Tensor& c, const char* what) {
  if (c.rank() != 3 || c.variance() != kBracketVar) {
    throw ShapeError(std::string(what) + " must have slots (down,down,up)");
  }
}

void check_almost_complex(const Tensor& J, int dim) {
  if (J.rank() != 2 || J.variance() != std::vector<Variance>{Variance::up, Variance::down} ||
      J.dim() != dim) {
    throw ShapeError("J must be a (1,1)-tensor on the same frame");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Rational acc;
      for (int m = 0; m < dim; ++m) acc += J(i, m) * J(m, j);
      if (acc != (i == j ? Rational(-1) : Rational(0))) {
        throw StructureError("J is not an almost complex structure: J^2 != -identity");
      }
    }
  }
}

}  // namespace

LieAlgebra LieAlgebra::zero(int dim) {
  LieAlgebra lie;
  lie.dim = dim;
  lie.c = Tensor(dim, kBracketVar);
  return lie;
}

LieAlgebra make_lie_algebra(int dim, const std::vector<StructureEntry>& entries) {
  LieAlgebra lie = LieAlgebra::zero(dim);
  Tensor seen(dim, kBracketVar);  // nonzero marks an explicitly set component
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim) {
      throw StructureError("structure constant index out of range: (" + std::to_string(e.i + 1) +
                           "," + std::to_string(e.j + 1) + "," + std::to_string(e.k + 1) + ")");
    }
    if (e.i == e.j) {
      if (!e.value.is_zero()) {
        throw StructureError("bracket of a frame vector with itself must vanish: index " +
                             std::to_string(e.i + 1));
      }
      continue;
    }
    if (!seen(e.i, e.j, e.k).is_zero() && lie.c(e.i, e.j, e.k) != e.value) {
      throw StructureError("conflicting values for structure constant (" +
                           std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," +
                           std::to_string(e.k + 1) + ")");
    }
    lie.c.at({e.i, e.j, e.k}) = e.value;
    lie.c.at({e.j, e.i, e.k}) = -e.value;
    seen.at({e.i, e.j, e.k}) = Rational(1);
    seen.at({e.j, e.i, e.k}) = Rational(1);
  }
  return lie;
}

LieValidation validate(const LieAlgebra& lie) {
  check_bracket_shape(lie.c, "structure constants");
  const int n = lie.dim;
  LieValidation out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (lie.c(i, j, k) + lie.c(j, i, k) != Rational(0)) {
          out.antisymmetry_faults.push_back({i, j, k});
        }
      }
    }
  }
  // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0, componentwise in e_m.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
          Rational acc;
          for (int p = 0; p < n; ++p) {
            acc += lie.c(i, j, p) * lie.c(p, l, m);
            acc += lie.c(j, l, p) * lie.c(p, i, m);
            acc += lie.c(l, i, p) * lie.c(p, j, m);
          }
          if (!acc.is_zero()) out.jacobi_faults.push_back({i, j, l, m});
        }
      }
    }
  }
  return out;
}

Connection levi_civita(const LieAlgebra& lie, const Metric& metric) {
  check_bracket_shape(lie.c, "structure constants");
  const int n = lie.dim;
  if (metric.dim() != n) throw ShapeError("metric dimension does not match algebra");

  Connection conn{Tensor(n, kBracketVar)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // rhs_l = g([e_i,e_j],e_l) - g([e_j,e_l],e_i) + g([e_l,e_i],e_j)
      std::vector<Rational> rhs(n);
      for (int l = 0; l < n; ++l) {
        Rational acc;
        for (int m = 0; m < n; ++m) {
          acc += lie.c(i, j, m) * metric.g(m, l);
          acc -= lie.c(j, l, m) * metric.g(m, i);
          acc += lie.c(l, i, m) * metric.g(m, j);
        }
        rhs[l] = acc;
      }
      for (int k = 0; k < n; ++k) {
        Rational acc;
        for (int l = 0; l < n; ++l) acc += metric.inv(k, l) * rhs[l];
        conn.gamma.at({i, j, k}) = acc / Rational(2);
      }
    }
  }

  if (!torsion_vector(lie, conn).is_zero()) {
    throw InternalError("Levi-Civita construction produced torsion");
  }
  if (!covariant_derivative(metric.g, conn).is_zero()) {
    throw InternalError("Levi-Civita construction does not parallelize the metric");
  }
  return conn;
}

Tensor curvature(const LieAlgebra& lie, const Connection& conn, const Metric& metric) {
  check_bracket_shape(lie.c, "structure constants");
  check_bracket_shape(conn.gamma, "connection coefficients");
  const int n = lie.dim;
  if (conn.gamma.dim() != n || metric.dim() != n) {
    throw ShapeError("connection/metric dimension does not match algebra");
  }
  const Tensor& ga = conn.gamma;
  Tensor out(n, std::vector<Variance>(4, Variance::down));
  std::vector<Rational> v(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // v_l = component of R(e_i,e_j)e_k along e_l
        for (int l = 0; l < n; ++l) {
          Rational acc;
          for (int m = 0; m < n; ++m) {
            acc += ga(j, k, m) * ga(i, m, l);
            acc -= ga(i, k, m) * ga(j, m, l);
            acc -= lie.c(i, j, m) * ga(m, k, l);
          }
          v[l] = acc;
        }
        for (int w = 0; w < n; ++w) {
          Rational acc;
          for (int l = 0; l < n; ++l) acc += v[l] * metric.g(l, w);
          out.at({i, j, k, w}) = acc;
        }
      }
    }
  }
  return out;
}

Tensor ricci(const Tensor& riemann, const Metric& metric) {
  if (riemann.rank() != 4 || riemann.variance() != std::vector<Variance>(4, Variance::down)) {
    throw ShapeError("curvature must be a (0,4)-tensor");
  }
  const int n = riemann.dim();
  Tensor out(n, {Variance::down, Variance::down});
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      Rational acc;
      for (int i = 0; i < n; ++i) {
        for (int s = 0; s < n; ++s) {
          const Rational& w = metric.inv(i, s);
          if (w.is_zero()) continue;
          acc += w * riemann(i, y, z, s);
        }
      }
      out.at({y, z}) = acc;
    }
  }
  return out;
}

Rational scalar_curvature(const Tensor& rho, const Metric& metric) {
  if (rho.rank() != 2 || rho.variance() != std::vector<Variance>{Variance::down, Variance::down}) {
    throw ShapeError("Ricci tensor must be a (0,2)-tensor");
  }
  const int n = rho.dim();
  Rational acc;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Rational& w = metric.inv(j, k);
      if (!w.is_zero()) acc += w * rho(j, k);
    }
  }
  return acc;
}

Tensor torsion_vector(const LieAlgebra& lie, const Connection& conn) {
  check_bracket_shape(conn.gamma, "connection coefficients");
  const int n = lie.dim;
  Tensor out(n, kBracketVar);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        out.at({i, j, k}) = conn.gamma(i, j, k) - conn.gamma(j, i, k) - lie.c(i, j, k);
      }
    }
  }
  return out;
}

Tensor covariant_derivative(const Tensor& t, const Connection& conn) {
  check_bracket_shape(conn.gamma, "connection coefficients");
  const int n = conn.gamma.dim();
  if (t.rank() == 0) {
    // Constant scalars have vanishing derivative in every direction.
    Tensor out(n, {Variance::down});
    return out;
  }
  if (t.dim() != n) throw ShapeError("tensor dimension does not match connection");
  const int r = t.rank();
  std::vector<Variance> var;
  var.reserve(r + 1);
  var.push_back(Variance::down);
  for (int s = 0; s < r; ++s) var.push_back(t.variance()[s]);
  Tensor out(n, var);

  std::vector<int> idx(r, 0);
  const std::size_t count = t.size();
  for (std::size_t flat = 0; flat < count; ++flat) {
    t.unflatten(flat, idx);
    for (int a = 0; a < n; ++a) {
      Rational acc;
      for (int s = 0; s < r; ++s) {
        const int original = idx[s];
        if (t.variance()[s] == Variance::down) {
          for (int m = 0; m < n; ++m) {
            const Rational& ga = conn.gamma(a, original, m);
            if (ga.is_zero()) continue;
            idx[s] = m;
            acc -= ga * t.at(idx);
          }
        } else {
          for (int m = 0; m < n; ++m) {
            const Rational& ga = conn.gamma(a, m, original);
            if (ga.is_zero()) continue;
            idx[s] = m;
            acc += ga * t.at(idx);
          }
        }
        idx[s] = original;
      }
      if (!acc.is_zero()) {
        std::vector<int> oidx;
        oidx.reserve(r + 1);
        oidx.push_back(a);
        for (int s = 0; s < r; ++s) oidx.push_back(idx[s]);
        out.at(oidx) = acc;
      }
    }
  }
  return out;
}

Tensor nijenhuis(const Tensor& J, const LieAlgebra& lie) {
  check_bracket_shape(lie.c, "structure constants");
  const int n = lie.dim;
  check_almost_complex(J, n);
  Tensor out(n, kBracketVar);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // br1_m = [Je_i, Je_j]^m, br2_m = [Je_i, e_j]^m, br3_m = [e_i, Je_j]^m
      std::vector<Rational> br1(n), br2(n), br3(n);
      for (int m = 0; m < n; ++m) {
        Rational a1, a2, a3;
        for (int p = 0; p < n; ++p) {
          const Rational& jpi = J(p, i);
          if (!jpi.is_zero()) {
            for (int q = 0; q < n; ++q) a1 += jpi * J(q, j) * lie.c(p, q, m);
            a2 += jpi * lie.c(p, j, m);
          }
          a3 += J(p, j) * lie.c(i, p, m);
        }
        br1[m] = a1;
        br2[m] = a2;
        br3[m] = a3;
      }
      for (int k = 0; k < n; ++k) {
        Rational acc = br1[k] - lie.c(i, j, k);
        for (int m = 0; m < n; ++m) acc -= J(k, m) * (br2[m] + br3[m]);
        out.at({i, j, k}) = acc;
      }
    }
  }
  return out;
}

bool abelian_structure(const Tensor& J, const LieAlgebra& lie) {
  check_bracket_shape(lie.c, "structure constants");
  const int n = lie.dim;
  check_almost_complex(J, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rational acc;
        for (int p = 0; p < n; ++p) {
          const Rational& jpi = J(p, i);
          if (jpi.is_zero()) continue;
          for (int q = 0; q < n; ++q) acc += jpi * J(q, j) * lie.c(p, q, k);
        }
        if (acc != lie.c(i, j, k)) return false;
      }
    }
  }
  return true;
}

Tensor exterior_d(const Tensor& oneform, const LieAlgebra& lie) {
  check_bracket_shape(lie.c, "structure constants");
  if (oneform.rank() != 1 || oneform.variance()[0] != Variance::down) {
    throw ShapeError("exterior_d expects a 1-form");
  }
  const int n = lie.dim;
  if (oneform.dim() != n) throw ShapeError("1-form dimension does not match algebra");
  Tensor out(n, {Variance::down, Variance::down});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational acc;
      for (int k = 0; k < n; ++k) acc -= oneform(k) * lie.c(i, j, k);
      out.at({i, j}) = acc;
    }
  }
  return out;
}

}  // namespace hgman
