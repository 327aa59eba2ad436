/// Outcome of one axiom, with the first failing tuple of basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub(crate) fn record(&mut self, axiom: &'static str, witness: Option<Vec<usize>>) {
        self.checks.push(AxiomCheck { axiom, witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    /// `Ok` when every axiom holds, else an `AxiomViolation` naming the first failure.
    pub fn into_result(self) -> crate::Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(crate::Error::AxiomViolation(format!("{} fails at {:?}", c.axiom, c.witness.as_deref().unwrap_or(&[])))),
        }
    }
}
