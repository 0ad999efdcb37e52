//! Orbit cases of the `s`-dimensional extension analyses.
//!
//! Expressions use `a*`, `b*`, `c*` for the coordinates of `θ_1, θ_2, θ_3`
//! (`α`, `β`, `γ`), `n` for the dimension and `x, y, z, w` for the group
//! variables. A target row may contain the free orbit parameter `t`.

use crate::catalog::Family;

#[derive(Clone, Copy, Debug)]
pub enum Rule {
    /// A substitution is displayed; unspecified group variables keep their
    /// identity values (`x = y = 1`, `z = w = 0`).
    Displayed(&'static [(&'static str, &'static str)]),
    /// The orbit is stated without a substitution.
    Stated,
    /// The case is said to reduce to the listed cases.
    Reduces(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug)]
pub struct Target {
    pub name: &'static str,
    pub rows: &'static [&'static str],
    /// Polynomials in `t` that must not vanish.
    pub param_nonzero: &'static [&'static str],
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitCase {
    pub family: Family,
    pub s: usize,
    pub label: &'static str,
    /// `lhs=rhs` or `lhs!=rhs`.
    pub conditions: &'static [&'static str],
    pub rule: Rule,
    /// Alternatives; the case holds if the transformed span reaches one of them.
    pub targets: &'static [Target],
    /// Witness points, each `s` rows of comma-separated coordinates.
    pub points: &'static [&'static [&'static str]],
    /// Remark printed with the report.
    pub note: &'static str,
}

impl OrbitCase {
    pub fn id(&self) -> String {
        format!("{}dim/{}", self.s, self.label)
    }
}

const fn tg(name: &'static str, rows: &'static [&'static str]) -> Target {
    Target {
        name,
        rows,
        param_nonzero: &[],
    }
}

const fn tgp(name: &'static str, rows: &'static [&'static str], nz: &'static [&'static str]) -> Target {
    Target {
        name,
        rows,
        param_nonzero: nz,
    }
}

const M11: Family = Family::Mu1(1);
const M12: Family = Family::Mu1(2);
const M13: Family = Family::Mu1(3);
const M14: Family = Family::Mu1(4);

// μ_{1,1} orbit representatives
const N1: Target = tg("<n1>", &["1,0,0,0"]);
const N13: Target = tg("<n1+n3>", &["1,0,1,0"]);
const N134: Target = tg("<n1+n3+n4>", &["1,0,1,1"]);
const N14: Target = tg("<n1+n4>", &["1,0,0,1"]);
const N2T3: Target = tg("<n2+t*n3>", &["0,1,t,0"]);
const N3: Target = tg("<n3>", &["0,0,1,0"]);
const N34: Target = tg("<n3+n4>", &["0,0,1,1"]);
const N4: Target = tg("<n4>", &["0,0,0,1"]);

const T2_A1: Target = tg("<n1, n4>", &["1,0,0,0", "0,0,0,1"]);
const T2_A2: Target = tg("<n2+n3, n4>", &["0,1,1,0", "0,0,0,1"]);
const T2_A3: Target = tg("<n1, n3+n4>", &["1,0,0,0", "0,0,1,1"]);
const T2_A4: Target = tg("<n2+n3, n3+n4>", &["0,1,1,0", "0,0,1,1"]);
const T2_A5: Target = tg("<n3, n4>", &["0,0,1,0", "0,0,0,1"]);
const T2_A6: Target = tgp("<n2+t*n3, n4>", &["0,1,t,0", "0,0,0,1"], &["t-1"]);
const T2_A7: Target = tg("<n1+n2, n4>", &["1,1,0,0", "0,0,0,1"]);
const T2_A9: Target = tg("<n1+n2, n3+n4>", &["1,1,0,0", "0,0,1,1"]);
const T2_A10: Target = tg("<n1+n4, n3>", &["1,0,0,1", "0,0,1,0"]);
const T2_A11: Target = tg("<n1+n4, n2+t*n3>", &["1,0,0,1", "0,1,t,0"]);
const T2_A12: Target = tg("<n1+n2+n4, n2+n3>", &["1,1,0,1", "0,1,1,0"]);
const T2_B1A: Target = tg("<n1, n3>", &["1,0,0,0", "0,0,1,0"]);
const T2_B1B: Target = tg("<n1, n2+t*n3>", &["1,0,0,0", "0,1,t,0"]);
const T2_B3: Target = tg("<n1+n2, n2+n3>", &["1,1,0,0", "0,1,1,0"]);
const T2_B4: Target = tg("<n2, n3>", &["0,1,0,0", "0,0,1,0"]);

const T3_A1: Target = tg("<n1+n2, t*n2+n3, n3+n4>", &["1,1,0,0", "0,t,1,0", "0,0,1,1"]);
const T3_A3: Target = tg("<n1+n2, n2+n3, n4>", &["1,1,0,0", "0,1,1,0", "0,0,0,1"]);
const T3_A4: Target = tg("<n1+n3, n2, n4>", &["1,0,1,0", "0,1,0,0", "0,0,0,1"]);
const T3_A6: Target = tg("<n1+n4, n2, n3>", &["1,0,0,1", "0,1,0,0", "0,0,1,0"]);
const T3_B2: Target = tg("<n1, n2+n3, n3+n4>", &["1,0,0,0", "0,1,1,0", "0,0,1,1"]);
const T3_B3: Target = tg("<n1, n2+n3, n4>", &["1,0,0,0", "0,1,1,0", "0,0,0,1"]);
const T3_D: Target = tg("<n1, n2, n3>", &["1,0,0,0", "0,1,0,0", "0,0,1,0"]);

const TOP4: Target = tg("<n1, n2, n3, n4>", &["1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1"]);

// three-class families (μ_{1,2}, μ_{1,3}, μ_{1,4})
const K1T2: Target = tg("<n1+t*n2>", &["1,t,0"]);
const K13: Target = tg("<n1+n3>", &["1,0,1"]);
const K2: Target = tg("<n2>", &["0,1,0"]);
const K3: Target = tg("<n3>", &["0,0,1"]);
const KT13: Target = tg("<t*n1+n3>", &["t,0,1"]);
const K_1T2_3: Target = tg("<n1+t*n2, n3>", &["1,t,0", "0,0,1"]);
const K_2_3: Target = tg("<n2, n3>", &["0,1,0", "0,0,1"]);
const K_12_23: Target = tg("<n1+n2, n2+n3>", &["1,1,0", "0,1,1"]);
const K_12_13: Target = tg("<n1+n2, n1+n3>", &["1,1,0", "1,0,1"]);
const K_1_2: Target = tg("<n1, n2>", &["1,0,0", "0,1,0"]);
const K_12_T13: Target = tgp("<n1+n2, t*n1+n3>", &["1,1,0", "t,0,1"], &["t"]);
const TOP3: Target = tg("<n1, n2, n3>", &["1,0,0", "0,1,0", "0,0,1"]);

pub static CASES: &[OrbitCase] = &[
    // ---- μ_0 ----
    OrbitCase {
        family: Family::Mu0,
        s: 1,
        label: "a",
        conditions: &["a1!=0"],
        rule: Rule::Displayed(&[("x", "1/root(n+1, a1)")]),
        targets: &[tg("<n1>", &["1"])],
        points: &[&["1"], &["2^(n+1)"]],
        note: "",
    },
    // ---- μ_{1,1}, one-dimensional ----
    OrbitCase {
        family: M11,
        s: 1,
        label: "a/1",
        conditions: &["a1=0", "a4=0", "a2=0", "a3!=0"],
        rule: Rule::Displayed(&[("x", "1/a3"), ("y", "1")]),
        targets: &[N3],
        points: &[&["0,0,1,0"], &["0,0,-2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "a/2",
        conditions: &["a1=0", "a4=0", "a2!=0"],
        rule: Rule::Displayed(&[("x", "1/a2"), ("y", "1")]),
        targets: &[tg("<n2+alpha*n3>, alpha=a3/a2", &["0,1,a3/a2,0"])],
        points: &[&["0,1,2,0"], &["0,-3,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "a/3",
        conditions: &["a1=0", "a4!=0", "a2=a3"],
        rule: Rule::Displayed(&[("y", "1/sqrt(a4)"), ("w", "-a2/a4"), ("x", "1")]),
        targets: &[N4],
        points: &[&["0,2,2,1"], &["0,-1,-1,4"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "a/4",
        conditions: &["a1=0", "a4!=0", "a2!=a3"],
        rule: Rule::Displayed(&[
            ("x", "sqrt(a4)/(a2-a3)"),
            ("y", "1/sqrt(a4)"),
            ("w", "a3/(sqrt(a4)*(a3-a2))"),
        ]),
        targets: &[N34],
        points: &[&["0,1,0,1"], &["0,3,1,4"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "b/1",
        conditions: &["a1!=0", "a4=0", "a2=a3"],
        rule: Rule::Displayed(&[("x", "1/root(n, a1)"), ("y", "1"), ("z", "-a2/a1")]),
        targets: &[N1],
        points: &[&["1,2,2,0"], &["1,-1,-1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "b/2",
        conditions: &["a1!=0", "a4=0", "a2!=a3"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n, a1)"),
            ("y", "root(n, a1)/(a3-a2)"),
            ("z", "-a2/a1"),
        ]),
        targets: &[N13],
        points: &[&["1,0,1,0"], &["1,2,3,0"], &["1,1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "b/3",
        conditions: &["a1!=0", "a4!=0", "a2=a3"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n, a1)"),
            ("y", "1/sqrt(a4)"),
            ("z", "-a3/(a1*sqrt(a4))"),
            ("w", "0"),
        ]),
        targets: &[N14],
        points: &[&["1,2,2,1"], &["1,-1,-1,4"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 1,
        label: "b/4",
        conditions: &["a1!=0", "a4!=0", "a2!=a3"],
        rule: Rule::Displayed(&[
            ("x", "root(n-2, (a3-a2)^2/(a1*a4))"),
            ("y", "(a3-a2)/a4*x"),
            ("z", "-a2*(a3-a2)/(a1*a4)*x"),
            ("w", "0"),
        ]),
        targets: &[N134],
        points: &[&["1,0,1,1"], &["1,1,-1,4"]],
        note: "representative carries a scalar prefactor; compared projectively",
    },
    // ---- μ_{1,1}, two-dimensional ----
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/1",
        conditions: &["a4!=0", "a1=0", "b1!=0", "a2=a3", "b2=b3"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n, b1)"),
            ("y", "1/sqrt(a4)"),
            ("z", "-b2/(b1*sqrt(a4))"),
            ("w", "-a2/(a4*root(n, b1))"),
        ]),
        targets: &[T2_A1],
        points: &[&["0,2,2,1", "1,3,3,0"], &["0,-1,-1,4", "1,-2,-2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/2",
        conditions: &["a4!=0", "a1=0", "b1=0", "a2=a3", "b2=b3"],
        rule: Rule::Displayed(&[]),
        targets: &[T2_A2],
        points: &[&["0,1,1,1", "0,1,1,0"], &["0,2,2,-3", "0,-1,-1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/3",
        conditions: &["a4!=0", "a1=0", "b1!=0", "a2!=a3", "b2=b3"],
        rule: Rule::Displayed(&[
            ("y", "(a3-a2)/a4*x"),
            ("z", "-b2*(a3-a2)/(b1*a4)*x"),
            ("w", "-b2/b4*x"),
        ]),
        targets: &[T2_A3],
        points: &[&["0,0,1,1", "1,1,1,0"], &["0,1,-1,2", "1,2,2,0"]],
        note: "displayed w uses an undefined beta4",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/4",
        conditions: &["a4!=0", "a1=0", "b1=0", "a2!=a3", "b2=b3"],
        rule: Rule::Displayed(&[("y", "(a3-a2)/a4*x"), ("w", "-a2/a4*x")]),
        targets: &[T2_A4],
        points: &[&["0,0,1,1", "0,1,1,0"], &["0,2,-1,3", "0,-2,-2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/5",
        conditions: &["a4!=0", "a1=0", "b1=0", "a2=a3", "b2=0", "b3!=0"],
        rule: Rule::Displayed(&[("x", "1"), ("y", "1/sqrt(a4)"), ("w", "-a2/a4")]),
        targets: &[T2_A5],
        points: &[&["0,1,1,1", "0,0,1,0"], &["0,2,2,4", "0,0,-3,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/6",
        conditions: &["a4!=0", "a1=0", "b1=0", "a2=a3", "b2!=0", "b2!=b3"],
        rule: Rule::Displayed(&[("w", "-a2/a4*x")]),
        targets: &[tg("<n2+alpha*n3, n4>, alpha=b3/b2", &["0,1,b3/b2,0", "0,0,0,1"])],
        points: &[&["0,1,1,1", "0,1,2,0"], &["0,-2,-2,3", "0,2,0,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/7",
        conditions: &["a4!=0", "a1=0", "b1!=0", "a2=a3", "b2!=b3"],
        rule: Rule::Displayed(&[
            ("y", "b1/(b2-b3)*x^(n-1)"),
            ("z", "-b3/b1*x"),
            ("w", "-a2/a4*x"),
        ]),
        targets: &[T2_A7],
        points: &[&["0,1,1,1", "1,1,0,0"], &["0,2,2,-1", "3,1,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/8",
        conditions: &["a4!=0", "a1=0", "b1=0", "a2!=a3", "b2!=b3"],
        rule: Rule::Reduces(&["a/5", "a/6"]),
        targets: &[T2_A5, T2_A6],
        points: &[&["0,0,1,1", "0,1,0,0"], &["0,1,2,1", "0,1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/9",
        conditions: &["a4!=0", "a1=0", "b1!=0", "a2!=a3", "b2!=b3"],
        rule: Rule::Displayed(&[
            ("x", "root(n-2, (b2-b3)*(a3-a2)/(a4*b1))"),
            ("y", "(a3-a2)/a4*x"),
            ("z", "-b3*(a3-a2)/(b1*a4)*x"),
            ("w", "-a4/a2*x"),
        ]),
        targets: &[T2_A9],
        points: &[&["0,1,2,1", "1,2,1,0"], &["0,2,3,1", "-1,0,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/10",
        conditions: &["a4!=0", "a1!=0", "b1=0", "a2=a3", "b2=0", "b3!=0"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n, a1)"),
            ("y", "1/sqrt(a4)"),
            ("z", "-a2/(a4*sqrt(a4))"),
            ("w", "0"),
        ]),
        targets: &[T2_A10],
        points: &[&["1,2,2,1", "0,0,1,0"], &["1,1,1,4", "0,0,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/11",
        conditions: &["a4!=0", "a1!=0", "b1=0", "a2=a3", "b2!=0"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n, a1)"),
            ("y", "1/sqrt(a4)"),
            ("z", "-a2/(a4*sqrt(a4))"),
            ("w", "0"),
        ]),
        targets: &[tg("<n1+n4, n2+alpha*n3>, alpha=b3/b2", &["1,0,0,1", "0,1,b3/b2,0"])],
        points: &[&["1,2,2,1", "0,1,1,0"], &["1,-1,-1,1", "0,2,-1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/12",
        conditions: &["a4!=0", "a1!=0", "b1=0", "a2!=a3", "b2=b3"],
        rule: Rule::Displayed(&[
            ("x", "root(n-2, (a2-a3)^2/a4^2)"),
            ("y", "(a2-a3)/a4*root(n-2, (a2-a3)^2/a4^2)"),
            ("z", "0"),
            ("w", "-a3/a4*x"),
        ]),
        targets: &[T2_A12],
        points: &[&["1,1,0,1", "0,1,1,0"], &["2,3,1,2", "0,-1,-1,0"]],
        note: "radicand printed with alpha_n; alpha4 used",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "a/13",
        conditions: &["a4!=0", "a1!=0", "b1=0", "a2!=a3", "b2!=b3"],
        rule: Rule::Reduces(&["a/1", "a/11"]),
        targets: &[T2_A1, T2_A11],
        points: &[&["1,0,1,1", "0,1,0,0"], &["1,2,0,1", "0,1,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "b/1",
        conditions: &["a4=0", "a1!=0", "b1=0", "a2=a3"],
        rule: Rule::Stated,
        targets: &[T2_B1A, T2_B1B],
        points: &[&["1,1,1,0", "0,1,0,0"], &["2,-1,-1,0", "0,1,3,0"]],
        note: "section condition beta3=0 read as beta4=0 (normal form of theta2)",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "b/2",
        conditions: &["a4=0", "a1!=0", "b1=0", "a2!=a3", "b2!=b3"],
        rule: Rule::Reduces(&["b/1"]),
        targets: &[T2_B1A, T2_B1B],
        points: &[&["1,0,1,0", "0,1,0,0"], &["1,2,1,0", "0,-1,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "b/3",
        conditions: &["a4=0", "a1!=0", "b1=0", "a2!=a3", "b2=b3"],
        rule: Rule::Stated,
        targets: &[T2_B3],
        points: &[&["1,1,0,0", "0,1,1,0"], &["2,3,1,0", "0,-2,-2,0"]],
        note: "needs beta3 = beta2 != 0, so the section condition is read as beta4=0",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "b/4",
        conditions: &["a4=0", "a1=0", "b1=0"],
        rule: Rule::Stated,
        targets: &[T2_B4],
        points: &[&["0,1,0,0", "0,0,1,0"], &["0,1,2,0", "0,3,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 2,
        label: "b/5",
        conditions: &["a4=0", "a3=0"],
        rule: Rule::Reduces(&["b/1"]),
        targets: &[T2_B1A, T2_B1B],
        points: &[&["1,1,0,0", "0,1,2,0"], &["2,-1,0,0", "0,0,1,0"]],
        note: "witness points also take alpha1!=0, beta1=0, beta2!=beta3",
    },
    // ---- μ_{1,1}, three-dimensional ----
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/1",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2!=a3"],
        rule: Rule::Stated,
        targets: &[T3_A1],
        points: &[
            &["0,0,1,1", "0,0,1,0", "1,1,0,0"],
            &["0,2,1,1", "0,1,2,0", "2,1,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/2",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2!=b3"],
        rule: Rule::Reduces(&["a/1"]),
        targets: &[T3_A1],
        points: &[
            &["0,1,1,1", "0,1,2,0", "1,1,0,0"],
            &["0,0,0,1", "0,0,1,0", "1,2,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/3",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2=b3"],
        rule: Rule::Stated,
        targets: &[T3_A3],
        points: &[
            &["0,1,1,1", "0,1,1,0", "1,1,0,0"],
            &["0,0,0,2", "0,2,2,0", "1,-1,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/4",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1=0", "b1!=0", "c1=0", "a2=a3"],
        rule: Rule::Stated,
        targets: &[T3_A4],
        points: &[
            &["0,1,1,1", "1,0,1,0", "0,1,0,0"],
            &["0,0,0,1", "1,2,3,0", "0,2,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/5",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1=0", "b1!=0", "c1=0", "a2!=a3"],
        rule: Rule::Reduces(&["a/4"]),
        targets: &[T3_A4],
        points: &[
            &["0,0,1,1", "1,0,1,0", "0,1,0,0"],
            &["0,1,3,2", "2,1,1,0", "0,1,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "a/6",
        conditions: &["a4!=0", "b3!=0", "c2!=0", "a1!=0", "b1=0", "c1=0"],
        rule: Rule::Stated,
        targets: &[T3_A6],
        points: &[
            &["1,0,0,1", "0,0,1,0", "0,1,0,0"],
            &["1,2,3,4", "0,1,1,0", "0,2,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "b/1",
        conditions: &["a4!=0", "b3!=0", "c2=0", "b2!=b3"],
        rule: Rule::Reduces(&["a"]),
        targets: &[T3_A1, T3_A3, T3_A4, T3_A6],
        points: &[
            &["0,0,0,1", "0,0,1,0", "1,0,0,0"],
            &["0,1,2,1", "0,2,1,0", "1,0,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "b/2",
        conditions: &["a4!=0", "b3!=0", "c2=0", "a1=0", "b1=0", "c1!=0", "a2!=a3", "b2=b3"],
        rule: Rule::Stated,
        targets: &[T3_B2],
        points: &[
            &["0,0,1,1", "0,1,1,0", "1,0,0,0"],
            &["0,3,1,2", "0,2,2,0", "-1,0,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "b/3",
        conditions: &["a4!=0", "b3!=0", "c2=0", "a1=0", "b1=0", "c1!=0", "a2=a3", "b2=b3"],
        rule: Rule::Stated,
        targets: &[T3_B3],
        points: &[
            &["0,0,0,1", "0,1,1,0", "1,0,0,0"],
            &["0,2,2,1", "0,-1,-1,0", "2,0,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "c/1",
        conditions: &["a4!=0", "b3=0", "c2=0"],
        rule: Rule::Reduces(&["a", "b"]),
        targets: &[T3_A1, T3_A3, T3_A4, T3_A6, T3_B2, T3_B3],
        points: &[
            &["0,0,0,1", "0,1,0,0", "1,0,0,0"],
            &["0,1,2,1", "1,1,0,0", "1,0,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 3,
        label: "d",
        conditions: &["a4=0", "b3=0", "c2=0"],
        rule: Rule::Stated,
        targets: &[T3_D],
        points: &[
            &["0,0,1,0", "0,1,0,0", "1,0,0,0"],
            &["1,2,3,0", "1,1,0,0", "2,0,0,0"],
        ],
        note: "",
    },
    OrbitCase {
        family: M11,
        s: 4,
        label: "top",
        conditions: &[],
        rule: Rule::Stated,
        targets: &[TOP4],
        points: &[
            &["1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1"],
            &["1,2,3,4", "0,1,2,3", "0,0,1,2", "0,0,0,1"],
        ],
        note: "",
    },
    // ---- μ_{1,2} ----
    OrbitCase {
        family: M12,
        s: 1,
        label: "a/1",
        conditions: &["a3=0", "a1=0", "a2!=0"],
        rule: Rule::Displayed(&[("x", "1/root(n+1, a2^2)")]),
        targets: &[K2],
        points: &[&["0,1,0"], &["0,2^((n+1)/2),0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 1,
        label: "a/2",
        conditions: &["a3=0", "a1!=0"],
        rule: Rule::Displayed(&[("x", "1/root(n+1, a1^2)")]),
        targets: &[tg("<n1+alpha*n2>, alpha=a2/a1", &["1,a2/a1,0"])],
        points: &[&["1,2,0"], &["-1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 1,
        label: "b/1",
        conditions: &["a3!=0", "a1=a2"],
        rule: Rule::Displayed(&[("x", "1/root(n-1, a3)"), ("z", "-a1/root(n-1, a3^n)")]),
        targets: &[K3],
        points: &[&["2,2,1"], &["1,1,2^(n-1)"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 1,
        label: "b/2",
        conditions: &["a3!=0", "a1!=a2"],
        rule: Rule::Displayed(&[
            ("x", "root(n-3, (a1-a2)^2/a3^2)"),
            ("z", "-a2*root(n-3, (a1-a2)^2/a3^(n-1))"),
        ]),
        targets: &[K13],
        points: &[&["1,0,1"], &["3,1,2"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "a/1",
        conditions: &["a3!=0", "a1=a2", "b1!=0"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n+1, b1^2)"),
            ("z", "-a1/(a3*root(n+1, b1^2))"),
        ]),
        targets: &[tg("<n1+alpha*n2, n3>, alpha=b2/b1", &["1,b2/b1,0", "0,0,1"])],
        points: &[&["1,1,1", "1,2,0"], &["2,2,-1", "-1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "a/2",
        conditions: &["a3!=0", "a1=a2", "b1=0", "b2!=0"],
        rule: Rule::Displayed(&[
            ("x", "1/root(n+1, b2^2)"),
            ("z", "-a1/(a3*root(n+1, b2^2))"),
        ]),
        targets: &[K_2_3],
        points: &[&["1,1,1", "0,1,0"], &["3,3,2", "0,-1,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "a/3",
        conditions: &["a3!=0", "a1!=a2", "b1!=0", "b1!=b2"],
        rule: Rule::Reduces(&["a/1"]),
        targets: &[K_1T2_3],
        points: &[&["1,0,1", "1,0,0"], &["2,1,1", "1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "a/4",
        conditions: &["a3!=0", "a1!=a2", "b1!=0", "b1=b2"],
        rule: Rule::Displayed(&[
            ("x", "root(n-3, (a2-a1)^2/a3^2)"),
            ("z", "-a1*root(n-3, (a2-a1)^2/a3^(n-1))"),
        ]),
        targets: &[K_12_23],
        points: &[&["0,1,1", "1,1,0"], &["1,3,2", "2,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "a/5",
        conditions: &["a3!=0", "a1!=a2", "b1=0", "b2!=0"],
        rule: Rule::Reduces(&["a/2"]),
        targets: &[K_2_3],
        points: &[&["1,0,1", "0,1,0"], &["2,1,1", "0,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 2,
        label: "b",
        conditions: &["a3=0"],
        rule: Rule::Stated,
        targets: &[K_1_2],
        points: &[&["1,0,0", "0,1,0"], &["1,2,0", "3,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M12,
        s: 3,
        label: "top",
        conditions: &[],
        rule: Rule::Stated,
        targets: &[TOP3],
        points: &[&["1,0,0", "0,1,0", "0,0,1"], &["1,2,3", "0,1,2", "0,0,1"]],
        note: "",
    },
    // ---- μ_{1,3} ----
    OrbitCase {
        family: M13,
        s: 1,
        label: "a/1",
        conditions: &["a3=0", "a1=0", "a2!=0"],
        rule: Rule::Displayed(&[("x", "1/root(n-1, a2)")]),
        targets: &[K2],
        points: &[&["0,1,0"], &["0,2^(n-1),0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 1,
        label: "a/2",
        conditions: &["a3=0", "a1!=0"],
        rule: Rule::Displayed(&[("x", "1/root(n-1, a1)")]),
        targets: &[tg("<n1+alpha*n2>, alpha=a2/a1", &["1,a2/a1,0"])],
        points: &[&["1,2,0"], &["2^(n-1),1,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 1,
        label: "b/1",
        conditions: &["a3!=0", "a1=a2"],
        rule: Rule::Displayed(&[("x", "1/root(2*n-4, a3)"), ("z", "-a1/root(n-2, a3^(n-1))")]),
        targets: &[K3],
        points: &[&["1,1,1"], &["2,2,2^(2*n-4)"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 1,
        label: "b/2",
        conditions: &["a3!=0", "a1!=a2"],
        rule: Rule::Displayed(&[
            ("x", "root(n-3, (a1-a2)/a3)"),
            ("z", "-a2*root(n-3, (a1-a2)/a3^(n-2))"),
        ]),
        targets: &[K13],
        points: &[&["1,0,1"], &["3,1,2"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "a/1",
        conditions: &["a3!=0", "a1=a2", "b1!=0"],
        rule: Rule::Stated,
        targets: &[K_1T2_3],
        points: &[&["1,1,1", "1,2,0"], &["2,2,3", "1,0,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "a/2",
        conditions: &["a3!=0", "a1=a2", "b1=0", "b2!=0"],
        rule: Rule::Stated,
        targets: &[K_2_3],
        points: &[&["1,1,1", "0,1,0"], &["-1,-1,2", "0,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "a/3",
        conditions: &["a3!=0", "a1!=a2", "b1!=0", "b1!=b2"],
        rule: Rule::Reduces(&["a/1"]),
        targets: &[K_1T2_3],
        points: &[&["1,0,1", "1,0,0"], &["2,1,1", "1,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "a/4",
        conditions: &["a3!=0", "a1!=a2", "b1!=0", "b1=b2"],
        rule: Rule::Stated,
        targets: &[K_12_23, K_12_13],
        points: &[&["0,1,1", "1,1,0"], &["1,3,2", "2,2,0"]],
        note: "text orbit <n1+n2, n2+n3>; list display <n1+n2, n1+n3>; both checked",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "a/5",
        conditions: &["a3!=0", "a1!=a2", "b1=0", "b2!=0"],
        rule: Rule::Reduces(&["a/2"]),
        targets: &[K_2_3],
        points: &[&["1,0,1", "0,1,0"], &["2,1,1", "0,3,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 2,
        label: "b",
        conditions: &["a3=0"],
        rule: Rule::Stated,
        targets: &[K_1_2],
        points: &[&["1,0,0", "0,1,0"], &["1,2,0", "3,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M13,
        s: 3,
        label: "top",
        conditions: &[],
        rule: Rule::Stated,
        targets: &[TOP3],
        points: &[&["1,0,0", "0,1,0", "0,0,1"], &["1,2,3", "0,1,2", "0,0,1"]],
        note: "",
    },
    // ---- μ_{1,4} ----
    OrbitCase {
        family: M14,
        s: 1,
        label: "a/1",
        conditions: &["a3=0", "a1=0", "a2!=0"],
        rule: Rule::Stated,
        targets: &[K2],
        points: &[&["0,1,0"], &["0,-2,0"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 1,
        label: "a/2",
        conditions: &["a3=0", "a1!=0"],
        rule: Rule::Stated,
        targets: &[K1T2],
        points: &[&["1,2,0"], &["3,-1,0"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 1,
        label: "b",
        conditions: &["a3!=0"],
        rule: Rule::Stated,
        targets: &[KT13],
        points: &[&["2,0,1"], &["1,3,2"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 2,
        label: "a",
        conditions: &["a3!=0", "b1!=0", "a1!=a2", "b1=b2"],
        rule: Rule::Displayed(&[("z", "-a2/a3")]),
        targets: &[Target {
            name: "<n1+n2, alpha*n1+n3>, alpha=(a1-a2)/a3",
            rows: &["1,1,0", "(a1-a2)/a3,0,1"],
            param_nonzero: &[],
        }],
        points: &[&["1,0,1", "1,1,0"], &["3,1,2", "2,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 2,
        label: "b",
        conditions: &["a3!=0", "b1!=0", "b1!=b2"],
        rule: Rule::Displayed(&[("z", "(a1*b2-a2*b1)/((b1-b2)*a3)")]),
        targets: &[tg("<n1+alpha*n2, n3>, alpha=b2/b1", &["1,b2/b1,0", "0,0,1"])],
        points: &[&["1,0,1", "1,0,0"], &["2,1,3", "1,2,0"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 2,
        label: "d",
        conditions: &["a3!=0", "b1=0", "b2!=0"],
        rule: Rule::Stated,
        targets: &[K_2_3],
        points: &[&["1,0,1", "0,1,0"], &["2,3,-1", "0,2,0"]],
        note: "labels jump from (b) to (d)",
    },
    OrbitCase {
        family: M14,
        s: 2,
        label: "e",
        conditions: &["a3=0"],
        rule: Rule::Stated,
        targets: &[K_1_2],
        points: &[&["1,0,0", "0,1,0"], &["1,2,0", "3,1,0"]],
        note: "",
    },
    OrbitCase {
        family: M14,
        s: 3,
        label: "top",
        conditions: &[],
        rule: Rule::Stated,
        targets: &[TOP3],
        points: &[&["1,0,0", "0,1,0", "0,0,1"], &["1,2,3", "0,1,2", "0,0,1"]],
        note: "",
    },
];

/// Listed orbits `T_s` in display order, as targets.
pub fn t_list(family: Family, s: usize) -> Vec<Target> {
    match (family, s) {
        (Family::Mu0, 1) => vec![tg("<n1>", &["1"])],
        (Family::Mu1(1), 1) => vec![N1, N13, N134, N14, N2T3, N3, N34, N4],
        (Family::Mu1(1), 2) => vec![
            T2_B1B, T2_B1A, T2_A3, T2_A1, T2_B3, T2_A9, T2_A7, T2_A12, T2_A11, T2_A10, T2_B4, T2_A4,
            tg("<n2+t*n3, n4>", &["0,1,t,0", "0,0,0,1"]),
            T2_A5,
        ],
        (Family::Mu1(1), 3) => vec![T3_D, T3_B3, T3_B2, T3_A3, T3_A1, T3_A4, T3_A6],
        (Family::Mu1(1), 4) => vec![TOP4],
        (Family::Mu1(2), 1) | (Family::Mu1(3), 1) => vec![K1T2, K13, K2, K3],
        (Family::Mu1(4), 1) => vec![K1T2, KT13, K2],
        (Family::Mu1(2), 2) => vec![K_1_2, K_12_23, K_1T2_3, K_2_3],
        (Family::Mu1(3), 2) => vec![K_1_2, K_12_13, K_1T2_3, K_2_3],
        (Family::Mu1(4), 2) => vec![K_1_2, K_1T2_3, K_12_T13, K_2_3],
        (Family::Mu1(_), 3) => vec![TOP3],
        _ => Vec::new(),
    }
}

pub fn cases_for(family: Family, s: usize) -> Vec<&'static OrbitCase> {
    CASES.iter().filter(|c| c.family == family && c.s == s).collect()
}
