use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use gabidulin_core::text::{FieldSpec, KeyValues};
use gabidulin_core::FieldTower;

use crate::FieldArgs;

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

pub fn tower_from_file(path: &Path) -> Result<FieldTower> {
    let spec = FieldSpec::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    spec.to_tower().with_context(|| format!("building field from {}", path.display()))
}

/// `q = p^e` with `p` prime.
pub fn prime_power(q: u32) -> Result<(u32, usize)> {
    if q < 2 {
        bail!("q = {q} is not a prime power");
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a divisor");
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        bail!("q = {q} is not a prime power");
    }
    Ok((p, e))
}

pub fn tower_from_size(q: u32, m: usize) -> Result<FieldTower> {
    let (p, e) = prime_power(q)?;
    FieldTower::search(p, e, m).map_err(|e| anyhow!("field F_{q}^{m}: {e}"))
}

impl FieldArgs {
    /// The field from `--field`, then `--q/--m`, then the `field` key of
    /// `kv` (relative to `base_dir`).
    pub fn resolve(&self, kv: Option<(&KeyValues, &Path)>) -> Result<FieldTower> {
        self.try_resolve(kv)?
            .ok_or_else(|| anyhow!("no field given: use --field, --q with --m, or a `field = <path>` line"))
    }

    pub fn try_resolve(&self, kv: Option<(&KeyValues, &Path)>) -> Result<Option<FieldTower>> {
        if let Some(path) = &self.field {
            return tower_from_file(path).map(Some);
        }
        match (self.q, self.m) {
            (Some(q), Some(m)) => return tower_from_size(q, m).map(Some),
            (None, None) => {}
            _ => bail!("--q and --m must be given together"),
        }
        if let Some((kv, base)) = kv {
            if let Some(rel) = kv.get("field") {
                return tower_from_file(&base.join(rel)).map(Some);
            }
        }
        Ok(None)
    }

    pub fn field_path(&self) -> Option<&Path> {
        self.field.as_deref()
    }
}

pub fn parent_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}
