use super::Composition;

/// The Bratteli diagram of H₀ ⊂ H₁ ⊂ ⋯: level n holds the proper
/// compositions of n, and α at level n is joined to its restriction α_{≤n−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bratteli {
    pub levels: Vec<Vec<Composition>>,
    /// (upper, lower) pairs.
    pub edges: Vec<(Composition, Composition)>,
}

pub fn bratteli(levels: u32) -> Bratteli {
    let mut out = Bratteli { levels: Vec::new(), edges: Vec::new() };
    for n in 0..=levels {
        let level = Composition::proper_of_size(n);
        if n > 0 {
            for a in &level {
                let keep: Vec<u32> = a.descent_set().into_iter().filter(|&d| d <= n - 2).collect();
                let b = Composition::from_descents(n - 1, &keep).expect("valid descents");
                out.edges.push((a.clone(), b));
            }
        }
        out.levels.push(level);
    }
    out
}

impl Bratteli {
    /// One line per level, then one line per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (n, level) in self.levels.iter().enumerate() {
            let names: Vec<String> = level.iter().map(Composition::to_string).collect();
            s.push_str(&format!("level {n}: {}\n", names.join(" ")));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("edge {a} {b}\n"));
        }
        s
    }

    /// Graphviz rendering with one rank per level.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph bratteli {\n  rankdir=BT;\n");
        for level in &self.levels {
            let names: Vec<String> = level.iter().map(|a| format!("\"{a}\"")).collect();
            s.push_str(&format!("  {{ rank=same; {}; }}\n", names.join("; ")));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{b}\" -- \"{a}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}
