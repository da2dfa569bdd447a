use std::fmt;
use std::sync::Arc;

/// A program variable or its primed (post-state) copy.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarId {
    name: Arc<str>,
    primed: bool,
}

impl VarId {
    /// Panics if `name` is empty.
    pub fn new(name: impl AsRef<str>, primed: bool) -> Self {
        let name = name.as_ref();
        assert!(!name.is_empty(), "variable names must be nonempty");
        VarId {
            name: Arc::from(name),
            primed,
        }
    }

    pub fn unprimed(name: impl AsRef<str>) -> Self {
        Self::new(name, false)
    }

    pub fn primed(name: impl AsRef<str>) -> Self {
        Self::new(name, true)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn prime(&self) -> Self {
        VarId {
            name: self.name.clone(),
            primed: true,
        }
    }

    pub fn unprime(&self) -> Self {
        VarId {
            name: self.name.clone(),
            primed: false,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

/// Ordered variable environment shared by polyhedra.
pub type Env = Arc<[VarId]>;

/// `[x1..xn, x1'..xn']` for the unprimed names `vars`.
pub fn transition_env(vars: &[String]) -> Env {
    vars.iter()
        .map(VarId::unprimed)
        .chain(vars.iter().map(VarId::primed))
        .collect()
}

pub fn state_env(vars: &[String]) -> Env {
    vars.iter().map(VarId::unprimed).collect()
}

pub fn primed_state_env(vars: &[String]) -> Env {
    vars.iter().map(VarId::primed).collect()
}
