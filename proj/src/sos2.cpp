#include "pwl/sos2.hpp"

#include <algorithm>
#include <set>

#include "pwl/linalg.hpp"

namespace pwl {

void UnivariatePWL::validate() const {
  if (breakpoints.size() < 2) throw Error(Errc::DomainMismatch, "need at least one piece");
  if (breakpoints.size() != values.size()) {
    throw Error(Errc::DimensionMismatch, "breakpoint/value count mismatch");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i] >= breakpoints[i + 1]) {
      throw Error(Errc::DomainMismatch, "breakpoints must be strictly increasing");
    }
  }
}

Rational UnivariatePWL::piece_slope(int i) const {
  return (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
}

Rational UnivariatePWL::piece_intercept(int i) const {
  return values[i] - piece_slope(i) * breakpoints[i];
}

std::optional<Sos2Method> parse_method(std::string_view name) {
  if (name == "cc") return Sos2Method::Cc;
  if (name == "mc") return Sos2Method::Mc;
  if (name == "inc") return Sos2Method::Inc;
  if (name == "dlog") return Sos2Method::DLog;
  if (name == "log") return Sos2Method::Log;
  if (name == "logib") return Sos2Method::LogIb;
  if (name == "zzb") return Sos2Method::Zzb;
  if (name == "zzi") return Sos2Method::Zzi;
  return std::nullopt;
}

std::string_view method_name(Sos2Method m) {
  switch (m) {
    case Sos2Method::Cc: return "cc";
    case Sos2Method::Mc: return "mc";
    case Sos2Method::Inc: return "inc";
    case Sos2Method::DLog: return "dlog";
    case Sos2Method::Log: return "log";
    case Sos2Method::LogIb: return "logib";
    case Sos2Method::Zzb: return "zzb";
    case Sos2Method::Zzi: return "zzi";
  }
  return "?";
}

namespace {

FragVar binary_var(std::string name) {
  return FragVar{std::move(name), VarKind::Binary, 0, 1};
}

}  // namespace

FormulationFragment build_cc(int d) {
  if (d < 1) throw Error(Errc::DTooSmall, "cc needs d >= 1");
  FormulationFragment frag = lambda_fragment(d + 1);
  for (int k = 1; k <= d; ++k) frag.aux_vars.push_back(binary_var("y_" + std::to_string(k)));
  const int aux0 = frag.aux_offset();

  for (int v = 1; v <= d + 1; ++v) {
    FragRow row;
    row.name = "cc_" + std::to_string(v);
    row.coeffs = frag.zero_row();
    row.coeffs(v - 1) = 1;
    if (v > 1) row.coeffs(aux0 + v - 2) = -1;
    if (v <= d) row.coeffs(aux0 + v - 1) = -1;
    frag.rows.push_back(std::move(row));
  }
  FragRow pick;
  pick.name = "cc_pick";
  pick.coeffs = frag.zero_row();
  for (int k = 0; k < d; ++k) pick.coeffs(aux0 + k) = 1;
  pick.sense = Sense::Eq;
  pick.rhs = 1;
  frag.rows.push_back(std::move(pick));
  frag.pad_rows();
  return frag;
}

BicliqueCover build_logib_cover(int d) {
  if (d < 2) throw Error(Errc::DTooSmall, "logib cover needs d >= 2");
  const int r = ceil_log2(d);
  const int dbar = 1 << r;
  CodeMat codes = brgc(r).entries;

  BicliqueCover cover;
  cover.ground_size = d + 1;
  for (int k = 0; k < r; ++k) {
    BicliqueCover::Level level;
    for (int v = 1; v <= d + 1; ++v) {
      // Segments incident to breakpoint v, padded with virtual segments up to
      // dbar so truncation keeps the boundary incidences.
      bool all_one = true, all_zero = true;
      bool any = false;
      for (int seg : {v - 1, v}) {
        if (seg < 1 || seg > dbar) continue;
        any = true;
        if (codes(seg - 1, k) == 1) all_zero = false;
        else all_one = false;
      }
      if (!any) continue;
      if (all_one) level.a.push_back(v - 1);
      else if (all_zero) level.b.push_back(v - 1);
    }
    cover.levels.push_back(std::move(level));
  }
  return cover;
}

FormulationFragment assemble_ib(const BicliqueCover& cover, int lambda_count) {
  if (cover.ground_size > lambda_count) {
    throw Error(Errc::GroundSetMismatch, "cover ground set larger than lambda block");
  }
  validate_cover_shape(cover);
  FormulationFragment frag = lambda_fragment(lambda_count);
  const int levels = static_cast<int>(cover.levels.size());
  for (int k = 1; k <= levels; ++k) frag.aux_vars.push_back(binary_var("y_" + std::to_string(k)));
  const int aux0 = frag.aux_offset();

  for (int k = 0; k < levels; ++k) {
    FragRow ra;
    ra.name = "ib_a_" + std::to_string(k + 1);
    ra.coeffs = frag.zero_row();
    for (int v : cover.levels[k].a) ra.coeffs(v) = 1;
    ra.coeffs(aux0 + k) = -1;
    frag.rows.push_back(std::move(ra));

    FragRow rb;
    rb.name = "ib_b_" + std::to_string(k + 1);
    rb.coeffs = frag.zero_row();
    for (int v : cover.levels[k].b) rb.coeffs(v) = 1;
    rb.coeffs(aux0 + k) = 1;
    rb.rhs = 1;
    frag.rows.push_back(std::move(rb));
  }
  frag.pad_rows();
  return frag;
}

namespace {

// Canonical primitive direction: integer entries, gcd one, first nonzero
// positive.
RatVec canonical_direction(RatVec v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer den = v(i).get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  Integer gcd_num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) *= Rational(lcm_den, 1);
    Integer num = v(i).get_num();
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd_num > 1) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= Rational(gcd_num, 1);
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

std::vector<RatVec> distinct_hyperplane_normals(const std::vector<RatVec>& dirs, int r) {
  RatMat dir_mat(static_cast<Eigen::Index>(dirs.size()), r);
  for (std::size_t i = 0; i < dirs.size(); ++i) dir_mat.row(static_cast<Eigen::Index>(i)) = dirs[i].transpose();

  RatMat reduced = dir_mat;
  std::vector<Eigen::Index> pivots = rref_in_place(reduced);
  const int k = static_cast<int>(pivots.size());

  // Coordinates of each direction in the row-space basis are its entries at
  // the pivot columns (the basis rows are fully reduced).
  RatMat coords(static_cast<Eigen::Index>(dirs.size()), k);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (int j = 0; j < k; ++j) coords(static_cast<Eigen::Index>(i), j) = dirs[i](pivots[j]);
  }

  std::vector<RatVec> normals;
  auto push_normal = [&](const RatVec& w) {
    RatVec normal = RatVec::Constant(r, Rational(0));
    for (int j = 0; j < k; ++j) {
      normal += w(j) * reduced.row(j).transpose();
    }
    normal = canonical_direction(std::move(normal));
    for (const RatVec& seen : normals) {
      if (compare(seen, normal) == 0) return;
    }
    normals.push_back(std::move(normal));
  };

  if (k == 1) {
    RatVec w(1);
    w(0) = 1;
    push_normal(w);
  } else {
    const int n = static_cast<int>(dirs.size());
    // All (k-1)-subsets of the distinct directions.
    std::vector<int> combo(k - 1);
    for (int i = 0; i < k - 1; ++i) combo[i] = i;
    long long work = 0;
    while (true) {
      if (++work > 2'000'000) {
        throw Error(Errc::Unsupported, "hyperplane arrangement too large to enumerate");
      }
      RatMat sub(k - 1, k);
      for (int i = 0; i < k - 1; ++i) sub.row(i) = coords.row(combo[i]);
      RatMat kernel = nullspace<Rational>(sub);
      if (kernel.cols() == 1) push_normal(kernel.col(0));
      int pos = k - 2;
      while (pos >= 0 && combo[pos] == n - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < k - 1; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  std::sort(normals.begin(), normals.end(),
            [](const RatVec& a, const RatVec& b) { return compare(a, b) > 0; });
  return normals;
}

}  // namespace

FormulationFragment build_embedding_sos2(int d, const CodeMatrix& code) {
  if (code.d() != d) throw Error(Errc::DimensionMismatch, "code must have one row per piece");
  if (d < 2) throw Error(Errc::DegenerateDirections, "embedding needs d >= 2");
  const int r = code.r();
  if (r > 6) throw Error(Errc::Unsupported, "embedding supported up to r = 6");

  RatMat h(d, r);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r; ++j) h(i, j) = code.entries(i, j);
  }

  std::vector<RatVec> dirs;
  for (int i = 0; i + 1 < d; ++i) {
    RatVec c = (h.row(i + 1) - h.row(i)).transpose();
    bool zero = true;
    for (int j = 0; j < r; ++j) {
      if (c(j) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) continue;
    c = canonical_direction(std::move(c));
    bool seen = false;
    for (const RatVec& existing : dirs) {
      if (compare(existing, c) == 0) {
        seen = true;
        break;
      }
    }
    if (!seen) dirs.push_back(std::move(c));
  }
  if (dirs.empty()) throw Error(Errc::DegenerateDirections, "consecutive codes are identical");

  std::vector<RatVec> normals = distinct_hyperplane_normals(dirs, r);

  FormulationFragment frag = lambda_fragment(d + 1);
  bool binary = true;
  for (int i = 0; i < d && binary; ++i) {
    for (int j = 0; j < r; ++j) {
      if (code.entries(i, j) != 0 && code.entries(i, j) != 1) {
        binary = false;
        break;
      }
    }
  }
  for (int j = 0; j < r; ++j) {
    FragVar v;
    v.name = "y_" + std::to_string(j + 1);
    v.kind = binary ? VarKind::Binary : VarKind::Integer;
    int lo = code.entries(0, j), hi = code.entries(0, j);
    for (int i = 1; i < d; ++i) {
      lo = std::min(lo, code.entries(i, j));
      hi = std::max(hi, code.entries(i, j));
    }
    v.lb = lo;
    v.ub = hi;
    frag.aux_vars.push_back(std::move(v));
  }
  const int aux0 = frag.aux_offset();

  int idx = 0;
  for (const RatVec& b : normals) {
    ++idx;
    // g(v) = b . H_v with the end conventions H_0 = H_1, H_{d+1} = H_d.
    auto g = [&](int v) {
      int row = std::clamp(v, 1, d) - 1;
      return Rational(b.dot(h.row(row).transpose()));
    };
    FragRow lower;
    lower.name = "emb_lo_" + std::to_string(idx);
    lower.coeffs = frag.zero_row();
    FragRow upper;
    upper.name = "emb_up_" + std::to_string(idx);
    upper.coeffs = frag.zero_row();
    for (int v = 1; v <= d + 1; ++v) {
      Rational a = g(v);
      Rational bb = g(v - 1);
      lower.coeffs(v - 1) = std::min(a, bb);
      upper.coeffs(v - 1) = -std::max(a, bb);
    }
    for (int j = 0; j < r; ++j) {
      lower.coeffs(aux0 + j) = -b(j);
      upper.coeffs(aux0 + j) = b(j);
    }
    frag.rows.push_back(std::move(lower));
    frag.rows.push_back(std::move(upper));
  }

  // Pin y to the affine hull of the rows when they are not full-dimensional.
  RatMat dir_mat(static_cast<Eigen::Index>(dirs.size()), r);
  for (std::size_t i = 0; i < dirs.size(); ++i) dir_mat.row(static_cast<Eigen::Index>(i)) = dirs[i].transpose();
  RatMat kernel = nullspace<Rational>(dir_mat);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    RatVec n = canonical_direction(kernel.col(c));
    FragRow pin;
    pin.name = "emb_aff_" + std::to_string(c + 1);
    pin.coeffs = frag.zero_row();
    for (int j = 0; j < r; ++j) pin.coeffs(aux0 + j) = n(j);
    pin.sense = Sense::Eq;
    pin.rhs = n.dot(h.row(0).transpose());
    frag.rows.push_back(std::move(pin));
  }
  frag.pad_rows();
  return frag;
}

FormulationFragment build_zzb(int d) {
  if (d < 2) throw Error(Errc::DTooSmall, "zzb needs d >= 2");
  const int r = ceil_log2(d);
  CodeMat alpha = truncate(zigzag_integer(r), d).entries;

  FormulationFragment frag = lambda_fragment(d + 1);
  for (int j = 1; j <= r; ++j) frag.aux_vars.push_back(binary_var("y_" + std::to_string(j)));
  const int aux0 = frag.aux_offset();

  auto alpha_at = [&](int v, int i) {  // alpha^v_i with alpha^0 = alpha^1, alpha^{d+1} = alpha^d
    int row = std::clamp(v, 1, d) - 1;
    return alpha(row, i);
  };

  for (int i = 0; i < r; ++i) {
    // Middle term A^{-1}(y)_i = y_i + sum_{k>i} 2^{k-i-1} y_k.
    RatVec middle = RatVec::Constant(r, Rational(0));
    middle(i) = 1;
    for (int k = i + 1; k < r; ++k) middle(k) = Rational(Integer(1) << (k - i - 1), 1);

    FragRow lower;
    lower.name = "zzb_lo_" + std::to_string(i + 1);
    lower.coeffs = frag.zero_row();
    FragRow upper;
    upper.name = "zzb_up_" + std::to_string(i + 1);
    upper.coeffs = frag.zero_row();
    for (int v = 1; v <= d + 1; ++v) {
      lower.coeffs(v - 1) = alpha_at(v - 1, i);
      upper.coeffs(v - 1) = -Rational(alpha_at(v, i));
    }
    for (int k = 0; k < r; ++k) {
      lower.coeffs(aux0 + k) = -middle(k);
      upper.coeffs(aux0 + k) = middle(k);
    }
    frag.rows.push_back(std::move(lower));
    frag.rows.push_back(std::move(upper));
  }
  frag.pad_rows();
  return frag;
}

FormulationFragment build_dlog(int d) {
  if (d < 1) throw Error(Errc::DTooSmall, "dlog needs d >= 1");
  const int r = d > 1 ? ceil_log2(d) : 0;
  CodeMat codes;
  if (r > 0) codes = truncate(brgc(r), d).entries;

  FormulationFragment frag = lambda_fragment(d + 1);
  // gamma_{i,v} for piece i and its two incident breakpoints.
  for (int i = 1; i <= d; ++i) {
    for (int v : {i, i + 1}) {
      FragVar g;
      g.name = "gamma_" + std::to_string(i) + "_" + std::to_string(v);
      g.kind = VarKind::Continuous;
      g.lb = 0;
      g.ub = 1;
      frag.extra_vars.push_back(std::move(g));
    }
  }
  for (int k = 1; k <= r; ++k) frag.aux_vars.push_back(binary_var("y_" + std::to_string(k)));

  const int g0 = frag.extra_offset();
  const int aux0 = frag.aux_offset();
  auto gamma_index = [&](int piece, int v) {  // piece 1..d, v in {piece, piece+1}
    return g0 + 2 * (piece - 1) + (v == piece ? 0 : 1);
  };

  for (int v = 1; v <= d + 1; ++v) {
    FragRow link;
    link.name = "dlog_lam_" + std::to_string(v);
    link.coeffs = frag.zero_row();
    link.coeffs(v - 1) = 1;
    if (v > 1) link.coeffs(gamma_index(v - 1, v)) = -1;
    if (v <= d) link.coeffs(gamma_index(v, v)) = -1;
    link.sense = Sense::Eq;
    frag.rows.push_back(std::move(link));
  }
  FragRow total;
  total.name = "dlog_total";
  total.coeffs = frag.zero_row();
  for (int i = 0; i < 2 * d; ++i) total.coeffs(g0 + i) = 1;
  total.sense = Sense::Eq;
  total.rhs = 1;
  frag.rows.push_back(std::move(total));

  for (int k = 0; k < r; ++k) {
    FragRow on;
    on.name = "dlog_on_" + std::to_string(k + 1);
    on.coeffs = frag.zero_row();
    FragRow off;
    off.name = "dlog_off_" + std::to_string(k + 1);
    off.coeffs = frag.zero_row();
    for (int i = 1; i <= d; ++i) {
      FragRow& target = codes(i - 1, k) == 1 ? on : off;
      target.coeffs(gamma_index(i, i)) = 1;
      target.coeffs(gamma_index(i, i + 1)) = 1;
    }
    on.coeffs(aux0 + k) = -1;
    off.coeffs(aux0 + k) = 1;
    off.rhs = 1;
    frag.rows.push_back(std::move(on));
    frag.rows.push_back(std::move(off));
  }
  frag.pad_rows();
  return frag;
}

FormulationFragment build_sos2_fragment(Sos2Method method, int d) {
  switch (method) {
    case Sos2Method::Cc:
      return build_cc(d);
    case Sos2Method::DLog:
      return build_dlog(d);
    case Sos2Method::Log:
      return build_embedding_sos2(d, truncate(brgc(ceil_log2(d)), d));
    case Sos2Method::LogIb:
      return assemble_ib(build_logib_cover(d), d + 1);
    case Sos2Method::Zzb:
      return build_zzb(d);
    case Sos2Method::Zzi:
      return build_embedding_sos2(d, truncate(zigzag_integer(ceil_log2(d)), d));
    case Sos2Method::Mc:
    case Sos2Method::Inc:
      throw Error(Errc::UnknownMethod, "mc/inc are not lambda-space formulations");
  }
  throw Error(Errc::UnknownMethod, "unhandled method");
}

}  // namespace pwl
