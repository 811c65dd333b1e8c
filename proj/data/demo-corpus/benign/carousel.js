function Carousel(root, interval) {
  this.root = root;
  this.interval = interval || 4000;
  this.index = 0;
  this.slides = root.querySelectorAll(".slide");
}

Carousel.prototype.start = function () {
  var self = this;
  this.timer = setInterval(function () {
    self.index = (self.index + 1) % self.slides.length;
    self.render();
  }, this.interval);
};

Carousel.prototype.render = function () {
  for (var i = 0; i < this.slides.length; i++) {
    this.slides[i].style.display = i === this.index ? "block" : "none";
  }
};
