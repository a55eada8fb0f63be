use graph_core::Weight;
use serde::{Deserialize, Serialize};

/// How the dummy terminals above the top row and below the bottom row meet
/// the w-portals of their L-VG.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DummyAttachment {
    /// The dummy is the same vertex as every w-portal of its gadget.
    #[default]
    Identified,
    /// The dummy is a separate vertex with an `M_6` edge to each w-portal.
    ///
    /// A merged dummy lets a tree walk p -> w -> q through two selectors and
    /// skip horizontal edges, so the identified form can undercut `K_M` on
    /// no-instances. The pendant form costs one extra `M_6` per dummy.
    Pendant,
}

/// Powers `M^0 ..= M^7` of the base weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Powers(pub Vec<Weight>);

impl Powers {
    pub fn new(m: &Weight) -> Self {
        Powers((0..=7).map(|i| m.pow(i)).collect())
    }

    pub fn m(&self, i: usize) -> &Weight {
        &self.0[i]
    }

    /// `sum c * M^i` over `plus` minus the same over `minus`; panics if negative.
    pub fn combo(&self, plus: &[(u64, usize)], minus: &[(u64, usize)]) -> Weight {
        let sum = |terms: &[(u64, usize)]| terms.iter().map(|&(c, i)| self.m(i) * c).sum::<Weight>();
        sum(plus).checked_sub(&sum(minus)).expect("gadget weights stay positive for M > N")
    }
}

/// Sizes and weights of the construction for a (padded) grid with `n`, `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionConstants {
    pub n: usize,
    pub k: usize,
    /// `N = n^2`, entries per gadget.
    pub big_n: usize,
    /// `L = n`, verification gadgets per chain.
    pub l: usize,
    /// Flower size `t = 2n`.
    pub t: usize,
    /// `M = 10 k^2 N L`, raised to `10 N L + 1` when k = 1 so that `M > 10 N L`.
    pub m: Weight,
    pub powers: Powers,
}

impl ReductionConstants {
    pub fn new(n: usize, k: usize) -> Self {
        let big_n = n * n;
        let m = Weight::from((10 * k * k * big_n * n).max(10 * big_n * n + 1) as u64);
        ReductionConstants { n, k, big_n, l: n, t: 2 * n, powers: Powers::new(&m), m }
    }

    pub fn mi(&self, i: usize) -> &Weight {
        self.powers.m(i)
    }

    /// Weight of a cheapest connected subgraph through one L-VG's p, q and w portals.
    pub fn chain_weight(&self) -> Weight {
        let (nn, l) = (self.big_n as u64, self.l as u64);
        self.powers.combo(&[(l, 5), (l * (nn - 1), 4), (nn, 3), (1, 2)], &[])
    }

    /// `K_M = k(k-1)(2t-4) t M_7 + 3k^2 M_6 + 2k^2 (L M_5 + L(N-1) M_4 + N M_3 + M_2)`.
    pub fn budget(&self) -> Weight {
        self.budget_for(DummyAttachment::Identified)
    }

    /// `K_M`, plus `2k M_6` when the dummies hang off pendant edges.
    pub fn budget_for(&self, mode: DummyAttachment) -> Weight {
        let (k, t) = (self.k as u64, self.t as u64);
        let flowers = self.mi(7) * (k * (k - 1) * (2 * t - 4) * t);
        let heavy = self.mi(6) * (3 * k * k);
        let pendant = match mode {
            DummyAttachment::Identified => Weight::zero(),
            DummyAttachment::Pendant => self.mi(6) * (2 * k),
        };
        flowers + heavy + pendant + &self.chain_weight() * (2 * k * k)
    }

    /// Vertices of `G_M`: 2k^2 L-VGs of L(N^2+2N+1)+2N vertices, minus the
    /// w-portals absorbed by the 2k dummy terminals, plus flower interiors,
    /// fuse vertices, the root and the heads.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count_for(DummyAttachment::Identified)
    }

    pub fn vertex_count_for(&self, mode: DummyAttachment) -> usize {
        let (n, k, nn, l, t) = (self.n, self.k, self.big_n, self.l, self.t);
        let lvg = l * (nn * nn + 2 * nn + 1) + 2 * nn;
        let rest = k * (k - 1) * (t * t / 2 - t) + k * (k - 1) * n + 1 + k;
        match mode {
            DummyAttachment::Identified => 2 * k * k * lvg - 2 * k * (l - 1) + rest,
            DummyAttachment::Pendant => 2 * k * k * lvg + 2 * k + rest,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_k2_budget() {
        let c = ReductionConstants::new(2, 2);
        assert_eq!((c.big_n, c.l, c.t), (4, 2, 4));
        assert_eq!(c.m, Weight::from(320u64));
        let p = &c.powers;
        let want = p.combo(&[(32, 7), (12, 6), (16, 5), (48, 4), (32, 3), (8, 2)], &[]);
        assert_eq!(c.budget(), want);
        assert!(c.budget() > Weight::from(i64::MAX as u64), "exceeds signed 64 bits");
        assert_eq!(c.budget().to_string(), "11008055371105075200");
    }

    #[test]
    fn base_exceeds_ten_nl() {
        for (n, k) in [(2, 1), (2, 2), (4, 3), (8, 2)] {
            let c = ReductionConstants::new(n, k);
            assert!(c.m > Weight::from((10 * c.big_n * c.l) as u64));
        }
    }
}
