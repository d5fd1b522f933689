// siegel-reduce - symplectic reduction toolkit for tube domains
// Copyright 2026 siegel-reduce Contributors
// Licensed under Apache 2.0

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegel/cone.hpp"
#include "siegel/error.hpp"
#include "siegel/liecond.hpp"
#include "siegel/moment.hpp"
#include "siegel/reduce.hpp"
#include "siegel/sampling.hpp"
#include "siegel/tube.hpp"

namespace py = pybind11;

using namespace siegel;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symplectic reduction on tube domains over self-dual cones";

  py::register_exception<error>(m, "SiegelError", PyExc_RuntimeError);

  // ---- cones -------------------------------------------------------------
  py::class_<Cone> cone(m, "Cone", "A proper open convex cone from the closed-form catalog");
  cone.def_static("lorentz", &Cone::lorentz, py::arg("d"),
                  "The lorentz cone { w in R^{d+1} | w_0 > |(w_1, ..., w_d)| }")
      .def_static("orthant", &Cone::orthant, py::arg("n"),
                  "The positive orthant { w in R^n | w_i > 0 }")
      .def_static("product", &Cone::product, py::arg("factors"),
                  "The direct product of the factor cones, as concatenated blocks")
      .def_property_readonly("dim", &Cone::dim, "Ambient dimension dim V")
      .def_property_readonly("degree", &Cone::degree,
                             "Homogeneity degree of the characteristic function (= dim)")
      .def("canonical_interior", &Cone::canonical_interior,
           "A fixed interior point with margin exactly 1")
      .def("__repr__", [](const Cone& c) {
        switch (c.kind()) {
          case Cone::Kind::lorentz: return "Cone.lorentz(" + std::to_string(c.dim() - 1) + ")";
          case Cone::Kind::orthant: return "Cone.orthant(" + std::to_string(c.dim()) + ")";
          default: return "Cone.product(dim=" + std::to_string(c.dim()) + ")";
        }
      });

  m.def("margin", &margin, py::arg("cone"), py::arg("w"),
        "Concave gauge of the cone: positive inside, zero on the boundary, negative outside");
  m.def("dual_margin", &dual_margin, py::arg("cone"), py::arg("y"),
        "Gauge of the open dual cone (equals margin for these self-dual kinds)");
  m.def("log_char", &log_char, py::arg("cone"), py::arg("w"),
        "log of the characteristic function, up to an additive constant per kind");
  m.def("dual_map", &dual_map, py::arg("cone"), py::arg("w"),
        "The dual map w -> -grad log_char(w); satisfies dot(w, dual_map(w)) == dim V");
  m.def("log_char_hessian", &log_char_hessian, py::arg("cone"), py::arg("w"),
        "Hessian of log_char; symmetric positive definite on the cone");
  m.def("project_closure", &project_closure, py::arg("cone"), py::arg("x"),
        "Euclidean projection onto the closed cone");
  m.def("lower_bound_constant", &lower_bound_constant, py::arg("cone"), py::arg("y"),
        "The largest p > 0 with p * |w| <= dot(w, y) on the closed cone");

  // ---- tube domain ---------------------------------------------------------
  py::class_<TubePoint>(m, "TubePoint", "A point v + i w of the tube domain over the cone")
      .def(py::init<Cone, Vector, Vector>(), py::arg("cone"), py::arg("re"), py::arg("im"))
      .def_property_readonly("cone", &TubePoint::cone)
      .def_property_readonly("re", &TubePoint::re)
      .def_property_readonly("im", &TubePoint::im);

  py::class_<Tangent>(m, "Tangent", "A real tangent vector split into (re, im) derivatives")
      .def(py::init([](Vector re, Vector im) {
             return Tangent{std::move(re), std::move(im)};
           }),
           py::arg("re"), py::arg("im"))
      .def_readwrite("re", &Tangent::re)
      .def_readwrite("im", &Tangent::im);

  m.def("potential", &potential, py::arg("x"),
        "The Kaehler potential: log_char of the imaginary part");
  m.def("complex_mul_i", &complex_mul_i, py::arg("u"),
        "The complex structure J: (re, im) -> (-im, re)");
  m.def("kahler_form_oracle", &kahler_form_oracle, py::arg("x"), py::arg("u"), py::arg("w"),
        "Finite-difference oracle for the Kaehler form at x on constant fields u and w");

  // ---- momentum ------------------------------------------------------------
  py::class_<AffineGenerator>(m, "AffineGenerator",
                              "An element (A, a) of the affine Lie algebra: linear map plus "
                              "translation")
      .def(py::init([](Matrix linear, Vector translation) {
             return AffineGenerator{std::move(linear), std::move(translation)};
           }),
           py::arg("linear"), py::arg("translation"))
      .def_readwrite("linear", &AffineGenerator::linear)
      .def_readwrite("translation", &AffineGenerator::translation);

  m.def("bracket", &bracket, py::arg("f"), py::arg("g"),
        "The affine bracket [(A,a),(B,b)] = (AB - BA, Ab - Ba)");
  m.def("is_cone_compatible", &is_cone_compatible, py::arg("cone"), py::arg("xi"),
        py::arg("tol") = 1e-10,
        "Whether the linear part lies in the cone's linear automorphism algebra");
  m.def("check_independent", &check_independent, py::arg("gens"),
        "Raises unless the generators are linearly independent");
  m.def("vector_field", &vector_field, py::arg("xi"), py::arg("x"),
        "The induced vector field of the generator at x");
  m.def("momentum", &momentum, py::arg("xi"), py::arg("x"),
        "The Hamiltonian momentum function of the generator at x");
  m.def("momentum_map", &momentum_map, py::arg("gens"), py::arg("x"),
        "One momentum value per generator; zero exactly on the reduced level set");
  m.def("momentum_jacobian", &momentum_jacobian, py::arg("gens"), py::arg("x"),
        "The (k x 2n) Jacobian of momentum_map in (re, im) coordinates");
  m.def("exp_affine", &exp_affine, py::arg("xi"), py::arg("t"),
        "The one-parameter subgroup element exp(t xi) as an affine pair (E, b)");
  m.def("apply_affine", &apply_affine, py::arg("transform"), py::arg("x"),
        "Applies an affine pair to a tube point: re -> E re + b, im -> E im");

  // ---- reduction -----------------------------------------------------------
  py::class_<Subspace>(m, "Subspace",
                       "A linear subspace H of V, stored as an orthonormal basis plus an "
                       "orthonormal basis of the complement")
      .def(py::init<const Matrix&>(), py::arg("basis_candidate"))
      .def_static("zero", &Subspace::zero, py::arg("ambient_dim"))
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def_property_readonly("complement", &Subspace::complement);

  m.def("translation_generators", &translation_generators, py::arg("h"),
        "The translation generators (0, b_j) for the basis columns of H");

  py::enum_<Verdict>(m, "Verdict")
      .value("admissible", Verdict::admissible)
      .value("inadmissible", Verdict::inadmissible)
      .value("undecided", Verdict::undecided);

  py::class_<AdmissibilityCertificate>(m, "AdmissibilityCertificate")
      .def_readonly("verdict", &AdmissibilityCertificate::verdict)
      .def_readonly("witness", &AdmissibilityCertificate::witness)
      .def_readonly("witness_margin", &AdmissibilityCertificate::witness_margin);

  m.def("check_admissible", &check_admissible, py::arg("cone"), py::arg("h"),
        py::arg("seed") = 0,
        "Decides whether H meets the closed cone only at 0, with a witness either way");
  m.def("in_zero_cone", &in_zero_cone, py::arg("cone"), py::arg("h"), py::arg("w"),
        py::arg("tol"),
        "Whether the dual image of w is orthogonal to H within tol (w interior)");

  py::class_<ReduceOptions>(m, "ReduceOptions")
      .def(py::init<>())
      .def_readwrite("grad_tol", &ReduceOptions::grad_tol)
      .def_readwrite("max_iter", &ReduceOptions::max_iter)
      .def_readwrite("armijo", &ReduceOptions::armijo)
      .def_readwrite("backtrack", &ReduceOptions::backtrack)
      .def_readwrite("check_admissibility", &ReduceOptions::check_admissibility)
      .def_readwrite("seed", &ReduceOptions::seed);

  py::class_<ReductionResult>(m, "ReductionResult")
      .def_readonly("point", &ReductionResult::point)
      .def_readonly("shift", &ReductionResult::shift)
      .def_readonly("residual", &ReductionResult::residual)
      .def_readonly("iterations", &ReductionResult::iterations);

  m.def("reduce_point", &reduce_point, py::arg("cone"), py::arg("h"), py::arg("x"),
        py::arg("options") = ReduceOptions{},
        "The zero-momentum representative of the complexified-H orbit of x");
  m.def("orbit_agreement", &orbit_agreement, py::arg("cone"), py::arg("h"), py::arg("x"),
        py::arg("trials"), py::arg("seed"),
        "Largest deviation of reduced representatives over random orbit translates");

  py::enum_<Membership>(m, "Membership")
      .value("member", Membership::member)
      .value("non_member", Membership::non_member)
      .value("undecided", Membership::undecided);

  py::class_<MembershipResult>(m, "MembershipResult")
      .def_readonly("status", &MembershipResult::status)
      .def_readonly("witness", &MembershipResult::witness)
      .def_readonly("achieved_margin", &MembershipResult::achieved_margin);

  m.def("quotient_membership", &quotient_membership, py::arg("cone"), py::arg("h"), py::arg("t"),
        py::arg("seed") = 0,
        "Whether some H-shift moves complement * t into the open cone");

  py::class_<SplitCoordinates>(m, "SplitCoordinates")
      .def_readonly("quotient_re", &SplitCoordinates::quotient_re)
      .def_readonly("quotient_im", &SplitCoordinates::quotient_im)
      .def_readonly("fiber_re", &SplitCoordinates::fiber_re)
      .def_readonly("fiber_im", &SplitCoordinates::fiber_im);

  m.def("split_map", &split_map, py::arg("cone"), py::arg("h"), py::arg("re"), py::arg("im"),
        py::arg("seed") = 0,
        "Holomorphic splitting into quotient (complement) and fiber (H) coordinates");
  m.def("reduced_coordinates", &reduced_coordinates, py::arg("cone"), py::arg("h"), py::arg("x"),
        py::arg("options") = ReduceOptions{},
        "Quotient coordinates of the reduced representative of x");
  m.def("slice_bound", &slice_bound, py::arg("cone"), py::arg("h"), py::arg("k_radius"),
        py::arg("y"),
        "Norm bound for the closed-cone part of (ball(k_radius) + H), from witness y");

  // ---- lie condition ---------------------------------------------------------
  py::class_<LieConditionReport>(m, "LieConditionReport")
      .def_readonly("dim_kernel", &LieConditionReport::dim_kernel)
      .def_readonly("dim_w", &LieConditionReport::dim_w)
      .def_readonly("span_residual", &LieConditionReport::span_residual)
      .def_readonly("bracket_residual", &LieConditionReport::bracket_residual)
      .def_readonly("orbit_residual", &LieConditionReport::orbit_residual)
      .def_readonly("saturated", &LieConditionReport::saturated)
      .def_readonly("pass_", &LieConditionReport::pass)
      .def_readonly("reason", &LieConditionReport::reason);

  m.def("kernel_basis", &kernel_basis, py::arg("gens"), py::arg("x"),
        "Orthonormal basis of the momentum Jacobian null space at x (x on the zero set)");
  m.def("w_space", &w_space, py::arg("gens"), py::arg("x"),
        "Orthonormal basis of the maximal complex subspace of the kernel");
  m.def("verify_lie_condition", &verify_lie_condition, py::arg("cone"), py::arg("gens"),
        py::arg("x0"), py::arg("s"), py::arg("samples"), py::arg("seed"),
        "Verifies a candidate subalgebra: span, bracket closure, and sampled orbits");

  // ---- determinism -------------------------------------------------------------
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"),
        "Derives a decorrelated per-instance seed from a master seed");
}
