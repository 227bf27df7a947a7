//! JSON relation documents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{GroundSet, Preorder, Relation, TotalPreorder};

pub const SCHEMA: &str = "preorder-doc/1";

/// A relation as labels plus `[i, j]` pairs meaning `labels[i] ≿ labels[j]`.
///
/// With the closure flags set, the pairs may be a Hasse diagram; the
/// reflexive and transitive closures are taken before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub schema: String,
    pub labels: Vec<String>,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default)]
    pub reflexive_closure: bool,
    #[serde(default)]
    pub transitive_closure: bool,
}

impl RelationDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RelationDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(Error::Document(format!(
                "unsupported schema `{}`, expected `{SCHEMA}`",
                doc.schema
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Every pair of the relation, diagonal included, closures off.
    pub fn full(rel: &Relation) -> Self {
        RelationDocument {
            schema: SCHEMA.into(),
            labels: rel.ground().labels().to_vec(),
            pairs: rel.pairs().map(|(i, j)| [i, j]).collect(),
            reflexive_closure: false,
            transitive_closure: false,
        }
    }

    /// A cycle through each indifference class plus one pair per covering
    /// edge between class minima, closures on.
    pub fn compact(p: &Preorder) -> Self {
        let hasse = p.hasse_edges();
        let mut pairs = Vec::new();
        for class in &hasse.nodes {
            let members: Vec<usize> = class.iter().collect();
            if members.len() > 1 {
                for w in members.windows(2) {
                    pairs.push([w[0], w[1]]);
                }
                pairs.push([members[members.len() - 1], members[0]]);
            }
        }
        for &(a, b) in &hasse.edges {
            let rep = |c: usize| hasse.nodes[c].first().expect("nonempty class");
            pairs.push([rep(a), rep(b)]);
        }
        RelationDocument {
            schema: SCHEMA.into(),
            labels: p.ground().labels().to_vec(),
            pairs,
            reflexive_closure: true,
            transitive_closure: true,
        }
    }

    pub fn from_total(t: &TotalPreorder) -> Self {
        RelationDocument::compact(&t.to_preorder())
    }

    /// The relation after the requested closures; not yet validated.
    pub fn to_relation(&self) -> Result<Relation> {
        let ground = GroundSet::new(self.labels.iter().cloned())?;
        let mut rel = Relation::from_pairs(ground, self.pairs.iter().map(|&[i, j]| (i, j)))?;
        if self.reflexive_closure {
            rel = rel.reflexive_closure();
        }
        if self.transitive_closure {
            rel = rel.transitive_closure();
        }
        Ok(rel)
    }

    pub fn to_preorder(&self) -> Result<Preorder> {
        self.to_relation()?.validate_preorder()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::SubsetMask;

    fn tied_chain() -> Preorder {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        Preorder::generated_by_labels(g, &[("a", "b"), ("b", "c"), ("c", "b"), ("c", "d")]).unwrap()
    }

    #[test]
    fn compact_and_full_documents_decode_to_the_same_preorder() {
        let p = tied_chain();
        assert_eq!(RelationDocument::compact(&p).to_preorder().unwrap(), p);
        assert_eq!(
            RelationDocument::full(p.as_relation())
                .to_preorder()
                .unwrap(),
            p
        );
        assert_eq!(
            RelationDocument::compact(&p).pairs,
            vec![[1, 2], [2, 1], [0, 1], [1, 3]]
        );
    }

    #[test]
    fn json_round_trip() {
        let doc = RelationDocument::compact(&tied_chain());
        assert_eq!(RelationDocument::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn closures_default_to_off() {
        let doc = RelationDocument::from_json(
            r#"{"schema":"preorder-doc/1","labels":["a","b","c"],"pairs":[[0,1],[1,2]]}"#,
        )
        .unwrap();
        assert!(!doc.reflexive_closure && !doc.transitive_closure);
        match doc.to_preorder() {
            Err(Error::NotPreorder(v)) => assert!(!v.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for text in [
            "not json",
            r#"{"schema":"other/1","labels":["a"],"pairs":[]}"#,
            r#"{"schema":"preorder-doc/1","labels":["a"],"pairs":[],"extra":1}"#,
        ] {
            assert!(
                matches!(RelationDocument::from_json(text), Err(Error::Document(_))),
                "{text}"
            );
        }
        let doc = RelationDocument::from_json(
            r#"{"schema":"preorder-doc/1","labels":["a"],"pairs":[[0,3]]}"#,
        )
        .unwrap();
        assert!(matches!(
            doc.to_relation(),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn total_documents() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let t = TotalPreorder::new(g, vec![SubsetMask(0b101), SubsetMask(0b010)]).unwrap();
        let back = RelationDocument::from_total(&t)
            .to_preorder()
            .unwrap()
            .to_total()
            .unwrap();
        assert_eq!(back, t);
    }
}
