use super::generators::GeneratorSet;
use super::polyhedron::Polyhedron;
use crate::ratlin::Env;

/// Closed convex hull of a union. An empty list, or a list of empty
/// members, yields the empty polyhedron over `env`.
pub fn hull_union(env: Env, ps: &[Polyhedron]) -> Polyhedron {
    let mut pooled = GeneratorSet::default();
    for p in ps {
        assert_eq!(p.env(), &env, "hull of polyhedra over different environments");
        pooled.extend(p.generators());
    }
    Polyhedron::from_generators(&pooled, env)
}
