#include "setopt/instance.hpp"

#include <fstream>
#include <sstream>

namespace setopt {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw InstanceError("line " + std::to_string(l.number) + ": " + msg);
}

Rat rat_at(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l, "missing rational value");
  try {
    return rat_from_string(l.tokens[i]);
  } catch (const std::invalid_argument& e) {
    fail(l, e.what());
  }
}

ExtReal extreal_at(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l, "missing value");
  try {
    return ExtReal::from_string(l.tokens[i]);
  } catch (const std::invalid_argument& e) {
    fail(l, e.what());
  }
}

Vec vec_at(const Line& l, std::size_t i, int dim) {
  Vec v;
  for (int k = 0; k < dim; ++k) v.push_back(rat_at(l, i + k));
  return v;
}

long int_at(const Line& l, std::size_t i) {
  Rat r = rat_at(l, i);
  if (r.get_den() != 1) fail(l, "expected an integer");
  return r.get_num().get_si();
}

bool bool_at(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l, "missing boolean");
  if (l.tokens[i] == "true") return true;
  if (l.tokens[i] == "false") return false;
  fail(l, "expected true or false");
}

// Reads "key c0 c1 ..." coefficient runs that end at the next keyword.
Poly poly_run(const Line& l, std::size_t& i) {
  Poly p;
  while (i < l.tokens.size()) {
    const std::string& t = l.tokens[i];
    bool numeric = t.find_first_not_of("+-/0123456789") == std::string::npos;
    if (!numeric) break;
    p.push_back(rat_at(l, i));
    ++i;
  }
  if (p.empty()) fail(l, "empty coefficient list");
  return p;
}

std::vector<Rat> make_dyadic(int n) {
  std::vector<Rat> ts;
  Rat t(1, 2);
  for (int i = 0; i < n; ++i, t /= 2) ts.push_back(t);
  return ts;
}

std::vector<Rat> make_harmonic(int n) {
  std::vector<Rat> ts;
  for (int k = 1; k <= n; ++k) ts.push_back(Rat(1, k));
  return ts;
}

}  // namespace

Instance parse_instance(const std::string& text, const std::string& name) {
  Instance inst;
  inst.name = name;
  auto lines = tokenize(text);

  std::vector<DualVector> normals;
  std::optional<Point> interior;
  std::vector<Point> ball_vertices;
  bool have_space = false, have_cone = false;

  std::size_t i = 0;
  auto expect_open = [&](const Line& l) {
    if (l.tokens.back() != "{") fail(l, "expected '{' at end of block header");
  };

  while (i < lines.size()) {
    const Line& head = lines[i];
    const std::string& kind = head.tokens[0];

    if (kind == "space") {
      expect_open(head);
      ++i;
      for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "dim_x") inst.dim_x = static_cast<int>(int_at(l, 1));
        else if (l.tokens[0] == "dim_z") inst.dim_z = static_cast<int>(int_at(l, 1));
        else fail(l, "unknown space directive: " + l.tokens[0]);
      }
      if (inst.dim_x < 1 || inst.dim_z < 1) fail(head, "space block needs dim_x and dim_z");
      have_space = true;
    } else if (kind == "cone") {
      if (!have_space) fail(head, "space block must precede cone");
      expect_open(head);
      ++i;
      for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "normal") normals.push_back(vec_at(l, 1, inst.dim_z));
        else if (l.tokens[0] == "interior_point") interior = vec_at(l, 1, inst.dim_z);
        else if (l.tokens[0] == "unit_ball_vertex") ball_vertices.push_back(vec_at(l, 1, inst.dim_z));
        else fail(l, "unknown cone directive: " + l.tokens[0]);
      }
      try {
        std::optional<VRep> ball;
        if (!ball_vertices.empty()) ball = VRep{inst.dim_z, ball_vertices, {}};
        inst.cone = make_cone(inst.dim_z, normals, interior, ball);
      } catch (const std::invalid_argument& e) {
        fail(head, e.what());
      }
      have_cone = true;
    } else if (kind == "function") {
      if (!have_space) fail(head, "space block must precede function");
      if (head.tokens.size() < 3) fail(head, "function block needs a backend name");
      expect_open(head);
      const std::string backend = head.tokens[1];
      ++i;
      if (backend == "vector_pl") {
        PLComplex pl;
        pl.xdim = inst.dim_x;
        pl.zdim = inst.dim_z;
        bool convex = false;
        for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
          const Line& l = lines[i];
          if (l.tokens[0] == "convex") {
            convex = bool_at(l, 1);
          } else if (l.tokens[0] == "site") {
            Vec x = vec_at(l, 1, inst.dim_x);
            std::size_t arrow = 1 + inst.dim_x;
            if (arrow >= l.tokens.size() || l.tokens[arrow] != "->") fail(l, "site needs 'x... -> z...'");
            Vec z = vec_at(l, arrow + 1, inst.dim_z);
            pl.sites.push_back(x);
            pl.values.push_back(z);
          } else if (l.tokens[0] == "simplex") {
            std::vector<int> sx;
            for (std::size_t k = 1; k < l.tokens.size(); ++k) sx.push_back(static_cast<int>(int_at(l, k)));
            pl.simplices.push_back(sx);
          } else {
            fail(l, "unknown vector_pl directive: " + l.tokens[0]);
          }
        }
        if (!have_cone) fail(head, "vector_pl needs a cone block");
        try {
          inst.fun = SetFun::extension(std::move(pl), inst.cone, convex);
        } catch (const std::invalid_argument& e) {
          fail(head, e.what());
        }
      } else if (backend == "affine_tracks") {
        AffineTracks tr;
        tr.zdim = inst.dim_z;
        bool convex = false;
        bool have_range = false;
        for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
          const Line& l = lines[i];
          if (l.tokens[0] == "convex") {
            convex = bool_at(l, 1);
          } else if (l.tokens[0] == "param_range") {
            tr.lo = rat_at(l, 1);
            tr.hi = rat_at(l, 2);
            have_range = true;
          } else if (l.tokens[0] == "track") {
            Vec base = vec_at(l, 1, inst.dim_z);
            std::size_t vel_kw = 1 + inst.dim_z;
            if (vel_kw >= l.tokens.size() || l.tokens[vel_kw] != "vel") fail(l, "track needs 'base... vel v...'");
            Vec vel = vec_at(l, vel_kw + 1, inst.dim_z);
            tr.tracks.emplace_back(base, vel);
          } else if (l.tokens[0] == "ray") {
            tr.extra_rays.push_back(vec_at(l, 1, inst.dim_z));
          } else {
            fail(l, "unknown affine_tracks directive: " + l.tokens[0]);
          }
        }
        if (!have_range || tr.lo > tr.hi) fail(head, "affine_tracks needs param_range lo <= hi");
        if (inst.dim_x != 1) fail(head, "affine_tracks needs dim_x = 1");
        if (!have_cone) fail(head, "affine_tracks needs a cone block");
        try {
          inst.fun = SetFun::affine_tracks(std::move(tr), inst.cone, convex);
        } catch (const std::invalid_argument& e) {
          fail(head, e.what());
        }
      } else if (backend == "scalar_profiles") {
        ScalarProfiles pr;
        pr.zdim = inst.dim_z;
        for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
          const Line& l = lines[i];
          if (l.tokens[0] == "profile") {
            if (l.tokens.size() < 2) fail(l, "profile needs a kind");
            const std::string pkind = l.tokens[1];
            if (l.tokens[2] != "zstar") fail(l, "profile needs zstar");
            DualVector zs = vec_at(l, 3, inst.dim_z);
            std::size_t k = 3 + inst.dim_z;
            if (pkind == "kseq") {
              KSeqFun fn;
              ExtReal f0 = ExtReal::pos_inf();
              bool have_f0 = false;
              while (k < l.tokens.size()) {
                const std::string& kw = l.tokens[k];
                ++k;
                if (kw == "tnum") fn.t_of_k.num = poly_run(l, k);
                else if (kw == "tden") fn.t_of_k.den = poly_run(l, k);
                else if (kw == "fnum") fn.phi_of_k.num = poly_run(l, k);
                else if (kw == "fden") fn.phi_of_k.den = poly_run(l, k);
                else if (kw == "f0") { f0 = extreal_at(l, k); ++k; have_f0 = true; }
                else if (kw == "n") { fn.display_n = int_at(l, k); ++k; }
                else fail(l, "unknown kseq field: " + kw);
              }
              if (!have_f0 || fn.t_of_k.num.empty() || fn.t_of_k.den.empty() || fn.phi_of_k.num.empty() ||
                  fn.phi_of_k.den.empty())
                fail(l, "kseq profile needs tnum tden fnum fden f0");
              fn.phi_at_zero = f0;
              // The sequence must be strictly decreasing to 0.
              if (ratfun_limit_at_infinity(fn.t_of_k) != ExtReal(0)) fail(l, "t_k must converge to 0");
              for (long kk = 1; kk < fn.display_n; ++kk) {
                Rat t1 = ratfun_eval(fn.t_of_k, Rat(kk)), t2 = ratfun_eval(fn.t_of_k, Rat(kk + 1));
                if (!(t1 > t2 && t2 > 0)) fail(l, "t_k must be strictly decreasing and positive");
              }
              pr.entries.push_back({zs, ScalarSegmentFn{fn}});
            } else if (pkind == "pl") {
              PLFun fn;
              while (k < l.tokens.size()) {
                if (l.tokens[k] != "chunk") fail(l, "pl profile expects chunk lists");
                ++k;
                std::vector<std::pair<Rat, Rat>> pts;
                while (k + 1 < l.tokens.size() && l.tokens[k] != "chunk") {
                  Rat t = rat_at(l, k), v = rat_at(l, k + 1);
                  pts.emplace_back(t, v);
                  k += 2;
                }
                if (pts.empty()) fail(l, "empty chunk");
                for (std::size_t j = 0; j + 1 < pts.size(); ++j)
                  if (!(pts[j].first < pts[j + 1].first)) fail(l, "chunk breakpoints must increase");
                fn.chunks.push_back(std::move(pts));
              }
              pr.entries.push_back({zs, ScalarSegmentFn{fn}});
            } else if (pkind == "samples") {
              SampleFun fn;
              bool have_f0 = false;
              while (k < l.tokens.size()) {
                const std::string& kw = l.tokens[k];
                ++k;
                if (kw == "f0") { fn.value_at_zero = extreal_at(l, k); ++k; have_f0 = true; }
                else if (kw == "sample") {
                  Rat t = rat_at(l, k);
                  ExtReal v = extreal_at(l, k + 1);
                  fn.samples.emplace_back(t, v);
                  k += 2;
                } else fail(l, "unknown samples field: " + kw);
              }
              if (!have_f0 || fn.samples.empty()) fail(l, "samples profile needs f0 and samples");
              pr.entries.push_back({zs, ScalarSegmentFn{fn}});
            } else {
              fail(l, "unknown profile kind: " + pkind);
            }
          } else if (l.tokens[0] == "primal_derivative") {
            if (l.tokens.size() >= 2 && l.tokens[1] == "empty") {
              pr.declared_primal_derivative = VRep::empty(inst.dim_z);
            } else {
              VRep v{inst.dim_z, {}, {}};
              std::size_t k = 1;
              while (k < l.tokens.size()) {
                if (l.tokens[k] == "vertex") {
                  v.vertices.push_back(vec_at(l, k + 1, inst.dim_z));
                  k += 1 + inst.dim_z;
                } else if (l.tokens[k] == "ray") {
                  v.rays.push_back(vec_at(l, k + 1, inst.dim_z));
                  k += 1 + inst.dim_z;
                } else {
                  fail(l, "primal_derivative expects vertex/ray lists");
                }
              }
              pr.declared_primal_derivative = v;
            }
          } else {
            fail(l, "unknown scalar_profiles directive: " + l.tokens[0]);
          }
        }
        if (inst.dim_x != 1) fail(head, "scalar_profiles needs dim_x = 1");
        inst.fun = SetFun::profile_family(std::move(pr), inst.cone);
      } else {
        fail(head, "unknown function backend: " + backend);
      }
    } else if (kind == "candidates" || kind == "directions") {
      if (!have_space) fail(head, "space block must precede point lists");
      expect_open(head);
      ++i;
      auto& list = kind == "candidates" ? inst.candidates : inst.directions;
      for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "point") fail(l, "expected point lines");
        list.push_back(vec_at(l, 1, inst.dim_x));
      }
    } else if (kind == "options") {
      expect_open(head);
      ++i;
      for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "t_sequence") {
          if (l.tokens.size() < 2) fail(l, "t_sequence needs a form");
          if (l.tokens[1] == "dyadic") inst.ts = make_dyadic(static_cast<int>(int_at(l, 2)));
          else if (l.tokens[1] == "harmonic") inst.ts = make_harmonic(static_cast<int>(int_at(l, 2)));
          else if (l.tokens[1] == "list") {
            for (std::size_t k = 2; k < l.tokens.size(); ++k) inst.ts.push_back(rat_at(l, k));
          } else fail(l, "unknown t_sequence form: " + l.tokens[1]);
        } else if (l.tokens[0] == "epsilons") {
          for (std::size_t k = 1; k < l.tokens.size(); ++k) inst.epsilons.push_back(rat_at(l, k));
        } else {
          fail(l, "unknown option: " + l.tokens[0]);
        }
      }
    } else if (kind == "inclusion_audit") {
      if (!have_cone) fail(head, "inclusion_audit needs a cone block");
      expect_open(head);
      ++i;
      InclusionBlock blk;
      for (; i < lines.size() && lines[i].tokens[0] != "}"; ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "profile") {
          if (l.tokens[1] != "zstar") fail(l, "profile line: zstar coords value v");
          DualVector zs = vec_at(l, 2, inst.dim_z);
          if (l.tokens[2 + inst.dim_z] != "value") fail(l, "profile line needs value");
          blk.profile_a.emplace_back(zs, extreal_at(l, 3 + inst.dim_z));
        } else if (l.tokens[0] == "rec_ray") {
          blk.rec_rays.push_back(vec_at(l, 1, inst.dim_z));
        } else if (l.tokens[0] == "b_constraint") {
          Vec n = vec_at(l, 1, inst.dim_z);
          blk.b_constraints.push_back(Halfspace{n, rat_at(l, 1 + inst.dim_z)});
        } else if (l.tokens[0] == "epsilons") {
          for (std::size_t k = 1; k < l.tokens.size(); ++k) blk.epsilons.push_back(rat_at(l, k));
        } else {
          fail(l, "unknown inclusion_audit directive: " + l.tokens[0]);
        }
      }
      if (blk.b_constraints.empty() || blk.profile_a.empty()) fail(head, "inclusion_audit needs B and profiles");
      inst.inclusion = std::move(blk);
    } else {
      fail(head, "unknown block: " + kind);
    }
    // Skip the closing brace of the block just parsed.
    if (i < lines.size() && lines[i].tokens[0] == "}") ++i;
  }

  if (!have_space) throw InstanceError("missing space block");
  if (inst.ts.empty()) inst.ts = make_dyadic(20);
  if (inst.epsilons.empty()) inst.epsilons = make_dyadic(6);
  for (const auto& p : inst.candidates)
    if (static_cast<int>(p.size()) != inst.dim_x) throw InstanceError("candidate dimension mismatch");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  return parse_instance(ss.str(), name);
}

}  // namespace setopt
