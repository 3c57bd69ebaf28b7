//! Resolves the mutually exclusive instance sources (file, fixture, or
//! generator spec) into a loaded instance with a printable name.

use complab_core::json::{load_instance, LoadedInstance};
use complab_core::{fixtures, generate, GenMode, GenSpec};

use crate::SourceArgs;

pub struct ResolvedSource {
    pub name: String,
    pub instance: LoadedInstance,
}

pub fn resolve(args: &SourceArgs) -> Result<ResolvedSource, String> {
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let instance = load_instance(&text).map_err(|e| format!("{path}: {e}"))?;
        let name = std::path::Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.clone());
        return Ok(ResolvedSource { name, instance });
    }
    if let Some(name) = &args.fixture {
        let bt = fixtures::fixture(name).ok_or_else(|| {
            format!("unknown fixture {:?}; available: {}", name, fixtures::fixture_names().join(", "))
        })?;
        return Ok(ResolvedSource { name: name.clone(), instance: LoadedInstance::Bipartite(bt) });
    }
    if let (Some(n1), Some(n2)) = (args.n1, args.n2) {
        let mode = GenMode::parse(&args.mode)
            .ok_or_else(|| format!("unknown mode {:?}; use uniform, acyclic, or sinkless", args.mode))?;
        let spec = GenSpec { n1, n2, seed: args.seed, mode };
        let bt = generate(&spec).map_err(|e| e.to_string())?;
        let name = format!("{}-{}x{}-seed{}", mode.name(), n1, n2, args.seed);
        return Ok(ResolvedSource { name, instance: LoadedInstance::Bipartite(bt) });
    }
    Err("no instance given; use --input, --fixture, or --n1/--n2".to_string())
}
