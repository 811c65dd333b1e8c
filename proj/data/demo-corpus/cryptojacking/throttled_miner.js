var MinerClient = function (siteKey, throttle) {
  this.siteKey = siteKey;
  this.throttle = throttle || 0.1;
  this.socket = null;
  this.job = null;
  this.hashes = 0;
};

MinerClient.prototype.connect = function (endpoint) {
  var self = this;
  this.socket = new WebSocket(endpoint);
  this.socket.onopen = function () {
    self.send("auth", { site_key: self.siteKey, type: "anonymous", user: null, goal: 0 });
  };
  this.socket.onmessage = function (ev) {
    var frame = JSON.parse(ev.data);
    if (frame.type === "job") {
      self.job = frame.params;
      self.grind();
    } else if (frame.type === "hash_accept") {
      self.hashes = frame.params.hashes;
    }
  };
};

MinerClient.prototype.send = function (type, params) {
  this.socket.send(JSON.stringify({ type: type, params: params }));
};

MinerClient.prototype.grind = function () {
  var budget = Math.floor(1000 * (1 - this.throttle));
  for (var i = 0; i < budget && this.job; i++) {
    var nonce = (Math.random() * 0xffffffff) >>> 0;
    var digest = this.hash(this.job.blob, nonce);
    if (this.belowTarget(digest, this.job.target)) {
      this.send("submit", { job_id: this.job.job_id, nonce: nonce.toString(16), result: digest });
      this.job = null;
    }
  }
};
